/* TLDF binary field-container reader/writer.
 *
 * Layout (little-endian throughout, IEEE-754 binary64 floats):
 *   bytes 0-7  magic "TLDF0001"
 *   u32        field count
 *   per field: u16 name length, name bytes, u8 kind (0 const, 1 scalar
 *              field, 2 tensor field); kind 0: one f64; kinds 1-2: u8 dim,
 *              u8 outer rank, u8 inner rank, u8 outer pair count + (u8,u8)
 *              pairs, u8 inner pair count + pairs, u64 gridsize N, then the
 *              component arrays (outer slot major, inner minor), each N f64.
 */
#ifndef TLDF_IO_H
#define TLDF_IO_H

#include <stddef.h>

typedef struct tldf_field {
    char* name;
    int kind; /* 0 const, 1 scalar field, 2 tensor field */
    double value; /* kind 0 */
    int dim;
    int outer_rank;
    int inner_rank;
    int n_outer_pairs;
    unsigned char* outer_pairs; /* flattened (p,q) pairs */
    int n_inner_pairs;
    unsigned char* inner_pairs;
    long gridsize;
    long n_components; /* outer count * inner count */
    double* data; /* n_components * gridsize values, component major */
} tldf_field;

typedef struct tldf_container {
    int count;
    tldf_field* fields;
} tldf_container;

/* Count of multi-indices over [0,dim)^rank satisfying idx[p] >= idx[q] for
 * every stored pair; equals the number of component arrays in the file. */
long tldf_component_count(int dim, int rank, int n_pairs, const unsigned char* pairs);

/* Both return 0 on success and fill `err` (NUL-terminated) on failure. */
int tldf_read(const char* path, tldf_container* out, char* err, size_t errlen);
int tldf_write(const char* path, const tldf_container* c, char* err, size_t errlen);

tldf_field* tldf_find(tldf_container* c, const char* name);
void tldf_release(tldf_container* c);

#endif /* TLDF_IO_H */
