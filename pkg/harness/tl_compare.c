/* Field-wise TLDF comparison.
 *
 *   tl_compare [--bitwise] <a.tldf> <b.tldf> [rtol]
 *
 * Matches fields by name (both containers must hold the same set), checks
 * shape metadata exactly, and compares values either bit for bit or within
 * the given relative tolerance (default 1e-13).  Relative error for a pair
 * (x, y) is |x-y| / max(|x|,|y|), taken as zero when both values are zero.
 *
 * Exit codes: 0 match, 1 mismatch, 2 usage/IO.
 */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "tldf_io.h"

static int shapes_differ(const tldf_field* a, const tldf_field* b)
{
    return a->kind != b->kind || a->dim != b->dim || a->outer_rank != b->outer_rank
        || a->inner_rank != b->inner_rank || a->gridsize != b->gridsize
        || a->n_components != b->n_components;
}

int main(int argc, char** argv)
{
    int bitwise = 0;
    int argbase = 1;
    double rtol = 1e-13;
    char err[256];
    tldf_container a, b;
    double worst = 0.0;

    if (argc > 1 && strcmp(argv[1], "--bitwise") == 0) {
        bitwise = 1;
        argbase = 2;
    }
    if (argc - argbase < 2) {
        fprintf(stderr, "usage: tl_compare [--bitwise] <a.tldf> <b.tldf> [rtol]\n");
        return 2;
    }
    if (argc - argbase > 2) {
        rtol = atof(argv[argbase + 2]);
    }
    if (tldf_read(argv[argbase], &a, err, sizeof err) != 0) {
        fprintf(stderr, "tl_compare: %s: %s\n", argv[argbase], err);
        return 2;
    }
    if (tldf_read(argv[argbase + 1], &b, err, sizeof err) != 0) {
        fprintf(stderr, "tl_compare: %s: %s\n", argv[argbase + 1], err);
        return 2;
    }
    if (a.count != b.count) {
        fprintf(stderr, "tl_compare: field counts differ (%d vs %d)\n", a.count, b.count);
        return 1;
    }
    for (int k = 0; k < a.count; ++k) {
        const tldf_field* fa = &a.fields[k];
        tldf_field* fb = tldf_find(&b, fa->name);
        size_t values;
        if (!fb) {
            fprintf(stderr, "tl_compare: field '%s' missing from %s\n", fa->name,
                    argv[argbase + 1]);
            return 1;
        }
        if (shapes_differ(fa, fb)) {
            fprintf(stderr, "tl_compare: field '%s' shapes differ\n", fa->name);
            return 1;
        }
        if (fa->kind == 0) {
            if (memcmp(&fa->value, &fb->value, 8) != 0) {
                fprintf(stderr, "tl_compare: const '%s' differs\n", fa->name);
                return 1;
            }
            continue;
        }
        values = (size_t)fa->n_components * (size_t)fa->gridsize;
        if (bitwise) {
            if (memcmp(fa->data, fb->data, values * 8) != 0) {
                fprintf(stderr, "tl_compare: field '%s' is not bit-identical\n", fa->name);
                return 1;
            }
            continue;
        }
        for (size_t v = 0; v < values; ++v) {
            double x = fa->data[v];
            double y = fb->data[v];
            double scale = fabs(x) > fabs(y) ? fabs(x) : fabs(y);
            double rel = scale > 0.0 ? fabs(x - y) / scale : 0.0;
            if (rel > worst) {
                worst = rel;
            }
            if (rel > rtol || isnan(x) != isnan(y)) {
                fprintf(stderr,
                        "tl_compare: field '%s' element %zu: %.17g vs %.17g "
                        "(rel %.3e > %.3e)\n",
                        fa->name, v, x, y, rel, rtol);
                return 1;
            }
        }
    }
    printf("tl_compare: %d fields match (max rel %.3e)\n", a.count, worst);
    tldf_release(&a);
    tldf_release(&b);
    return 0;
}
