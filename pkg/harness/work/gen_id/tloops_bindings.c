#include "tloops_kernels.h"
#include <stddef.h>

/* Argument descriptors for every generated kernel.  A harness drives kernels
 * through this table alone: each descriptor names the field bound to one
 * parameter, the shape it must have, and (for tensors) the alias table taking
 * a flattened multi-index (slot 0 fastest, outer group then inner) to its
 * canonical component, so symmetric images share one buffer. */

typedef struct tl_arg_desc {
    const char* name;        /* field name; consts use the parameter name */
    int kind;                /* 0 target tensor, 1 input tensor, 2 scalar field, 3 number */
    int dim;
    int outer_rank;
    int inner_rank;
    int n_outer_pairs;       /* symmetry inequality pairs, flattened (p1,q1,p2,q2,...) */
    const unsigned char* outer_pairs;
    int n_inner_pairs;
    const unsigned char* inner_pairs;
    long n_components;       /* canonical component count (outer*inner) */
    long n_flat;             /* dim**(outer_rank+inner_rank) */
    const long* alias;       /* n_flat entries: flat index -> component */
    double value;            /* kind 3 only */
} tl_arg_desc;

typedef struct tl_entry {
    int ordinal;
    const char* signature;
    int n_args;
    const tl_arg_desc* args;
    /* tensors: flattened aliased pointer arrays in descriptor order (target
     * first); scalars and numbers likewise in descriptor order */
    void (*call)(const long N, double** const* tensors,
                 const double* const* scalars, const double* numbers);
} tl_entry;


static const long tl_alias_0001_a0[] = {0,1,2};
static const long tl_alias_0001_a1[] = {0,1,2};
static const tl_arg_desc tl_args_0001[] = {
  {"assign1_A", 0, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0001_a0, 0.0},
  {"assign1_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0001_a1, 0.0},
};

static void tl_call_0001(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0001(N, T[0], (const double* const*)T[1]);
}

const tl_entry tloops_entries[] = {
  {1, "ASSIGN(set;LHS(assign1_A,3,[1,0],[],[vi+0]);LEAF(assign1_B,[vi+0]))", 2, tl_args_0001, tl_call_0001},
};
const int tloops_entry_count = 1;
