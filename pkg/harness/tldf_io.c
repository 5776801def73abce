#include "tldf_io.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static const unsigned char MAGIC[8] = "TLDF0001";

typedef struct reader {
    const unsigned char* data;
    size_t len;
    size_t pos;
    int failed;
} reader;

static int take(reader* r, void* out, size_t n)
{
    if (r->failed || r->pos + n > r->len) {
        r->failed = 1;
        return 0;
    }
    memcpy(out, r->data + r->pos, n);
    r->pos += n;
    return 1;
}

static unsigned char u8(reader* r)
{
    unsigned char v = 0;
    take(r, &v, 1);
    return v;
}

static unsigned u16(reader* r)
{
    unsigned char b[2] = {0, 0};
    take(r, b, 2);
    return (unsigned)b[0] | ((unsigned)b[1] << 8);
}

static unsigned long u32(reader* r)
{
    unsigned char b[4] = {0, 0, 0, 0};
    take(r, b, 4);
    return (unsigned long)b[0] | ((unsigned long)b[1] << 8) | ((unsigned long)b[2] << 16)
        | ((unsigned long)b[3] << 24);
}

static unsigned long long u64(reader* r)
{
    unsigned long long v = 0;
    unsigned char b[8] = {0};
    take(r, b, 8);
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | b[i];
    }
    return v;
}

static double f64(reader* r)
{
    /* assumes an IEEE-754 little-endian host, as on every supported target */
    double v = 0.0;
    take(r, &v, 8);
    return v;
}

long tldf_component_count(int dim, int rank, int n_pairs, const unsigned char* pairs)
{
    int idx[64];
    long count = 0;
    if (rank == 0) {
        return 1;
    }
    if (rank > 32 || dim < 1) {
        return -1;
    }
    memset(idx, 0, sizeof idx);
    for (;;) {
        int ok = 1;
        int pos;
        for (int p = 0; p < n_pairs; ++p) {
            if (idx[pairs[2 * p]] < idx[pairs[2 * p + 1]]) {
                ok = 0;
                break;
            }
        }
        count += ok;
        pos = 0;
        while (pos < rank) {
            if (++idx[pos] < dim) {
                break;
            }
            idx[pos] = 0;
            ++pos;
        }
        if (pos == rank) {
            break;
        }
    }
    return count;
}

static void fail(char* err, size_t errlen, const char* msg)
{
    if (err && errlen) {
        snprintf(err, errlen, "%s", msg);
    }
}

static int read_pairs(reader* r, int* n_pairs, unsigned char** pairs)
{
    int n = u8(r);
    *n_pairs = n;
    *pairs = NULL;
    if (n > 0) {
        *pairs = (unsigned char*)malloc((size_t)n * 2);
        if (!take(r, *pairs, (size_t)n * 2)) {
            return 0;
        }
    }
    return !r->failed;
}

int tldf_read(const char* path, tldf_container* out, char* err, size_t errlen)
{
    FILE* fp = fopen(path, "rb");
    unsigned char* blob = NULL;
    long fsize;
    reader r;
    unsigned long count;

    out->count = 0;
    out->fields = NULL;
    if (!fp) {
        fail(err, errlen, "cannot open container");
        return -1;
    }
    fseek(fp, 0, SEEK_END);
    fsize = ftell(fp);
    fseek(fp, 0, SEEK_SET);
    if (fsize < 12) {
        fclose(fp);
        fail(err, errlen, "container too short for header");
        return -1;
    }
    blob = (unsigned char*)malloc((size_t)fsize);
    if (fread(blob, 1, (size_t)fsize, fp) != (size_t)fsize) {
        free(blob);
        fclose(fp);
        fail(err, errlen, "short read");
        return -1;
    }
    fclose(fp);

    r.data = blob;
    r.len = (size_t)fsize;
    r.pos = 0;
    r.failed = 0;
    {
        unsigned char magic[8];
        take(&r, magic, 8);
        if (memcmp(magic, MAGIC, 8) != 0) {
            free(blob);
            fail(err, errlen, "bad magic");
            return -1;
        }
    }
    count = u32(&r);
    out->fields = (tldf_field*)calloc(count ? count : 1, sizeof(tldf_field));
    for (unsigned long k = 0; k < count; ++k) {
        tldf_field* f = &out->fields[k];
        unsigned name_len = u16(&r);
        f->name = (char*)calloc(name_len + 1, 1);
        take(&r, f->name, name_len);
        f->kind = u8(&r);
        if (r.failed) {
            break;
        }
        if (f->kind == 0) {
            f->value = f64(&r);
            f->n_components = 0;
        } else if (f->kind == 1 || f->kind == 2) {
            long oc, ic;
            f->dim = u8(&r);
            f->outer_rank = u8(&r);
            f->inner_rank = u8(&r);
            if (!read_pairs(&r, &f->n_outer_pairs, &f->outer_pairs)
                || !read_pairs(&r, &f->n_inner_pairs, &f->inner_pairs)) {
                break;
            }
            f->gridsize = (long)u64(&r);
            if (f->kind == 1) {
                f->n_components = 1;
            } else {
                oc = tldf_component_count(f->dim, f->outer_rank, f->n_outer_pairs,
                                          f->outer_pairs);
                ic = tldf_component_count(f->dim, f->inner_rank, f->n_inner_pairs,
                                          f->inner_pairs);
                if (oc < 0 || ic < 0) {
                    r.failed = 1;
                    break;
                }
                f->n_components = oc * ic;
            }
            {
                size_t values = (size_t)f->n_components * (size_t)f->gridsize;
                f->data = (double*)malloc(values ? values * 8 : 8);
                if (!take(&r, f->data, values * 8)) {
                    break;
                }
            }
        } else {
            r.failed = 1;
            break;
        }
        out->count = (int)(k + 1);
    }
    if (!r.failed && r.pos != r.len) {
        r.failed = 1;
        fail(err, errlen, "trailing bytes after the last field");
    } else if (r.failed) {
        fail(err, errlen, "truncated or malformed container");
    }
    free(blob);
    if (r.failed) {
        tldf_release(out);
        return -1;
    }
    return 0;
}

static void put_u16(FILE* fp, unsigned v)
{
    unsigned char b[2] = {(unsigned char)(v & 0xff), (unsigned char)(v >> 8)};
    fwrite(b, 1, 2, fp);
}

static void put_u32(FILE* fp, unsigned long v)
{
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) {
        b[i] = (unsigned char)(v >> (8 * i));
    }
    fwrite(b, 1, 4, fp);
}

static void put_u64(FILE* fp, unsigned long long v)
{
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) {
        b[i] = (unsigned char)(v >> (8 * i));
    }
    fwrite(b, 1, 8, fp);
}

int tldf_write(const char* path, const tldf_container* c, char* err, size_t errlen)
{
    FILE* fp = fopen(path, "wb");
    if (!fp) {
        fail(err, errlen, "cannot open output container");
        return -1;
    }
    fwrite(MAGIC, 1, 8, fp);
    put_u32(fp, (unsigned long)c->count);
    for (int k = 0; k < c->count; ++k) {
        const tldf_field* f = &c->fields[k];
        size_t name_len = strlen(f->name);
        put_u16(fp, (unsigned)name_len);
        fwrite(f->name, 1, name_len, fp);
        fputc(f->kind, fp);
        if (f->kind == 0) {
            fwrite(&f->value, 8, 1, fp);
            continue;
        }
        fputc(f->dim, fp);
        fputc(f->outer_rank, fp);
        fputc(f->inner_rank, fp);
        fputc(f->n_outer_pairs, fp);
        fwrite(f->outer_pairs, 1, (size_t)f->n_outer_pairs * 2, fp);
        fputc(f->n_inner_pairs, fp);
        fwrite(f->inner_pairs, 1, (size_t)f->n_inner_pairs * 2, fp);
        put_u64(fp, (unsigned long long)f->gridsize);
        fwrite(f->data, 8, (size_t)f->n_components * (size_t)f->gridsize, fp);
    }
    if (ferror(fp)) {
        fclose(fp);
        fail(err, errlen, "write error");
        return -1;
    }
    fclose(fp);
    return 0;
}

tldf_field* tldf_find(tldf_container* c, const char* name)
{
    for (int k = 0; k < c->count; ++k) {
        if (strcmp(c->fields[k].name, name) == 0) {
            return &c->fields[k];
        }
    }
    return NULL;
}

void tldf_release(tldf_container* c)
{
    for (int k = 0; k < c->count; ++k) {
        free(c->fields[k].name);
        free(c->fields[k].outer_pairs);
        free(c->fields[k].inner_pairs);
        free(c->fields[k].data);
    }
    free(c->fields);
    c->fields = NULL;
    c->count = 0;
}
