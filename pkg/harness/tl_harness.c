/* Conformance harness: runs generated C kernels over TLDF fixtures.
 *
 *   tl_harness <kernels.so | src1,src2,...> <manifest.tsv> <in.tldf> <out.tldf>
 *
 * The first argument is either a prebuilt shared object or a comma-separated
 * list of generated C sources, which are compiled on the fly.  The shared
 * object must export the bindings tables (tloops_entries/tloops_entry_count);
 * the harness wires TLDF fields to kernel parameters through the argument
 * descriptors, builds the flattened aliased component-pointer arrays, invokes
 * each kernel named in the manifest, and writes every field back out.  It
 * performs no arithmetic of its own beyond pointer setup.
 *
 * Exit codes: 0 success, 2 usage/IO, 3 bad manifest, 4 missing kernel entry,
 * 5 fixture/manifest shape mismatch, 6 on-the-fly compilation failure.
 */
#include <dlfcn.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <unistd.h>

#include "tldf_io.h"

/* Mirrors the descriptor layout emitted into tloops_bindings.c. */
typedef struct tl_arg_desc {
    const char* name;
    int kind; /* 0 target tensor, 1 input tensor, 2 scalar field, 3 number */
    int dim;
    int outer_rank;
    int inner_rank;
    int n_outer_pairs;
    const unsigned char* outer_pairs;
    int n_inner_pairs;
    const unsigned char* inner_pairs;
    long n_components;
    long n_flat;
    const long* alias;
    double value;
} tl_arg_desc;

typedef struct tl_entry {
    int ordinal;
    const char* signature;
    int n_args;
    const tl_arg_desc* args;
    void (*call)(const long N, double** const* tensors, const double* const* scalars,
                 const double* numbers);
} tl_entry;

static int pairs_match(int n_a, const unsigned char* a, int n_b, const unsigned char* b)
{
    if (n_a != n_b) {
        return 0;
    }
    return n_a == 0 || memcmp(a, b, (size_t)n_a * 2) == 0;
}

static int has_suffix(const char* s, const char* suffix)
{
    size_t n = strlen(s);
    size_t m = strlen(suffix);
    return n >= m && strcmp(s + n - m, suffix) == 0;
}

static const char* compile_sources(const char* list, char* soname, size_t len)
{
    char command[4096];
    char sources[2048];
    size_t k;
    snprintf(soname, len, "/tmp/tl_harness_%ld.so", (long)getpid());
    snprintf(sources, sizeof sources, "%s", list);
    for (k = 0; sources[k]; ++k) {
        if (sources[k] == ',') {
            sources[k] = ' ';
        }
    }
    snprintf(command, sizeof command, "cc -shared -fPIC -O2 -std=c99 %s -o %s -lm", sources,
             soname);
    if (system(command) != 0) {
        return "compilation of kernel sources failed";
    }
    return NULL;
}

int main(int argc, char** argv)
{
    char err[256] = {0};
    char soname[256] = {0};
    const char* sopath;
    void* handle;
    const tl_entry* entries;
    const int* entry_count;
    tldf_container data;
    FILE* manifest;
    char line[8192];
    long common_n = -1;

    if (argc != 5) {
        fprintf(stderr,
                "usage: tl_harness <kernels.so|src1,src2,...> <manifest> <in.tldf> <out.tldf>\n");
        return 2;
    }

    sopath = argv[1];
    if (!has_suffix(argv[1], ".so")) {
        const char* msg = compile_sources(argv[1], soname, sizeof soname);
        if (msg) {
            fprintf(stderr, "tl_harness: %s\n", msg);
            return 6;
        }
        sopath = soname;
    }
    handle = dlopen(sopath, RTLD_NOW);
    if (!handle) {
        fprintf(stderr, "tl_harness: %s\n", dlerror());
        return 4;
    }
    entries = (const tl_entry*)dlsym(handle, "tloops_entries");
    entry_count = (const int*)dlsym(handle, "tloops_entry_count");
    if (!entries || !entry_count) {
        fprintf(stderr, "tl_harness: %s lacks the bindings tables "
                        "(tloops_entries, tloops_entry_count)\n", sopath);
        return 4;
    }

    if (tldf_read(argv[3], &data, err, sizeof err) != 0) {
        fprintf(stderr, "tl_harness: %s: %s\n", argv[3], err);
        return 2;
    }

    manifest = fopen(argv[2], "r");
    if (!manifest) {
        fprintf(stderr, "tl_harness: cannot open manifest %s\n", argv[2]);
        return 2;
    }

    while (fgets(line, sizeof line, manifest)) {
        long ordinal;
        const tl_entry* entry = NULL;
        double*** tensor_args;
        const double** scalar_args;
        double* const_args;
        int n_tensors = 0, n_scalars = 0, n_consts = 0;

        if (line[0] == '\n' || line[0] == '\0') {
            continue;
        }
        ordinal = strtol(line, NULL, 10);
        if (ordinal <= 0) {
            fprintf(stderr, "tl_harness: malformed manifest line: %s", line);
            return 3;
        }
        for (int k = 0; k < *entry_count; ++k) {
            if (entries[k].ordinal == ordinal) {
                entry = &entries[k];
                break;
            }
        }
        if (!entry) {
            fprintf(stderr, "tl_harness: no kernel entry for symbol tl_%04ld\n", ordinal);
            return 4;
        }

        tensor_args = (double***)calloc((size_t)entry->n_args, sizeof(double**));
        scalar_args = (const double**)calloc((size_t)entry->n_args, sizeof(double*));
        const_args = (double*)calloc((size_t)entry->n_args, sizeof(double));

        for (int a = 0; a < entry->n_args; ++a) {
            const tl_arg_desc* desc = &entry->args[a];
            tldf_field* field;
            if (desc->kind == 3) {
                const_args[n_consts++] = desc->value;
                continue;
            }
            field = tldf_find(&data, desc->name);
            if (!field) {
                fprintf(stderr, "tl_harness: fixture lacks field '%s' (kernel %ld)\n",
                        desc->name, ordinal);
                return 5;
            }
            if (desc->kind == 2) {
                if (field->kind != 1) {
                    fprintf(stderr, "tl_harness: field '%s' is not a scalar field\n", desc->name);
                    return 5;
                }
                scalar_args[n_scalars++] = field->data;
            } else {
                if (field->kind != 2 || field->dim != desc->dim
                    || field->outer_rank != desc->outer_rank
                    || field->inner_rank != desc->inner_rank
                    || field->n_components != desc->n_components
                    || !pairs_match(field->n_outer_pairs, field->outer_pairs,
                                    desc->n_outer_pairs, desc->outer_pairs)
                    || !pairs_match(field->n_inner_pairs, field->inner_pairs,
                                    desc->n_inner_pairs, desc->inner_pairs)) {
                    fprintf(stderr, "tl_harness: field '%s' does not match kernel %ld's "
                                    "argument shape\n", desc->name, ordinal);
                    return 5;
                }
                /* aliased full-size pointer array: symmetric images share buffers */
                double** flat = (double**)malloc((size_t)desc->n_flat * sizeof(double*));
                for (long f = 0; f < desc->n_flat; ++f) {
                    flat[f] = field->data + desc->alias[f] * field->gridsize;
                }
                tensor_args[n_tensors++] = flat;
            }
            if (common_n < 0) {
                common_n = field->gridsize;
            } else if (field->gridsize != common_n) {
                fprintf(stderr, "tl_harness: field '%s' has gridsize %ld, expected %ld\n",
                        desc->name, field->gridsize, common_n);
                return 5;
            }
        }

        entry->call(common_n, (double** const*)tensor_args,
                    (const double* const*)scalar_args, const_args);

        for (int a = 0; a < n_tensors; ++a) {
            free(tensor_args[a]);
        }
        free(tensor_args);
        free(scalar_args);
        free(const_args);
    }
    fclose(manifest);

    if (tldf_write(argv[4], &data, err, sizeof err) != 0) {
        fprintf(stderr, "tl_harness: %s: %s\n", argv[4], err);
        return 2;
    }
    tldf_release(&data);
    dlclose(handle);
    if (soname[0]) {
        remove(soname);
    }
    return 0;
}
