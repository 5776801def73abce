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

static const long tl_alias_0002_a0[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0002_a1[] = {0,1,2,3,4,5,6,7,8};
static const tl_arg_desc tl_args_0002[] = {
  {"assign2_A", 0, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0002_a0, 0.0},
  {"assign2_B", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0002_a1, 0.0},
};

static void tl_call_0002(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0002(N, T[0], (const double* const*)T[1]);
}

static const long tl_alias_0003_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26};
static const long tl_alias_0003_a1[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26};
static const tl_arg_desc tl_args_0003[] = {
  {"assign3_A", 0, 3, 3, 0, 0, NULL, 0, NULL, 27, 27, tl_alias_0003_a0, 0.0},
  {"assign3_B", 1, 3, 3, 0, 0, NULL, 0, NULL, 27, 27, tl_alias_0003_a1, 0.0},
};

static void tl_call_0003(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0003(N, T[0], (const double* const*)T[1]);
}

static const long tl_alias_0004_a0[] = {0,1,2};
static const long tl_alias_0004_a1[] = {0,1,2};
static const long tl_alias_0004_a2[] = {0,1,2};
static const tl_arg_desc tl_args_0004[] = {
  {"add1_A", 0, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0004_a0, 0.0},
  {"add1_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0004_a1, 0.0},
  {"add1_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0004_a2, 0.0},
};

static void tl_call_0004(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0004(N, T[0], (const double* const*)T[1], (const double* const*)T[2]);
}

static const long tl_alias_0005_a0[] = {0,1,2};
static const long tl_alias_0005_a1[] = {0,1,2};
static const long tl_alias_0005_a2[] = {0,1,2};
static const long tl_alias_0005_a3[] = {0,1,2};
static const tl_arg_desc tl_args_0005[] = {
  {"add2_A", 0, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0005_a0, 0.0},
  {"add2_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0005_a1, 0.0},
  {"add2_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0005_a2, 0.0},
  {"add2_D", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0005_a3, 0.0},
};

static void tl_call_0005(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0005(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3]);
}

static const long tl_alias_0006_a0[] = {0,1,2};
static const long tl_alias_0006_a1[] = {0,1,2};
static const long tl_alias_0006_a2[] = {0,1,2};
static const long tl_alias_0006_a3[] = {0,1,2};
static const long tl_alias_0006_a4[] = {0,1,2};
static const tl_arg_desc tl_args_0006[] = {
  {"add3_A", 0, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0006_a0, 0.0},
  {"add3_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0006_a1, 0.0},
  {"add3_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0006_a2, 0.0},
  {"add3_D", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0006_a3, 0.0},
  {"add3_E", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0006_a4, 0.0},
};

static void tl_call_0006(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0006(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3], (const double* const*)T[4]);
}

static const long tl_alias_0007_a0[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0007_a1[] = {0,1,2};
static const long tl_alias_0007_a2[] = {0,1,2};
static const tl_arg_desc tl_args_0007[] = {
  {"outer1_A", 0, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0007_a0, 0.0},
  {"outer1_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0007_a1, 0.0},
  {"outer1_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0007_a2, 0.0},
};

static void tl_call_0007(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0007(N, T[0], (const double* const*)T[1], (const double* const*)T[2]);
}

static const long tl_alias_0008_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26};
static const long tl_alias_0008_a1[] = {0,1,2};
static const long tl_alias_0008_a2[] = {0,1,2};
static const long tl_alias_0008_a3[] = {0,1,2};
static const tl_arg_desc tl_args_0008[] = {
  {"outer2_A", 0, 3, 3, 0, 0, NULL, 0, NULL, 27, 27, tl_alias_0008_a0, 0.0},
  {"outer2_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0008_a1, 0.0},
  {"outer2_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0008_a2, 0.0},
  {"outer2_D", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0008_a3, 0.0},
};

static void tl_call_0008(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0008(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3]);
}

static const long tl_alias_0009_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const long tl_alias_0009_a1[] = {0,1,2};
static const long tl_alias_0009_a2[] = {0,1,2};
static const long tl_alias_0009_a3[] = {0,1,2};
static const long tl_alias_0009_a4[] = {0,1,2};
static const tl_arg_desc tl_args_0009[] = {
  {"outer3_A", 0, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0009_a0, 0.0},
  {"outer3_B", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0009_a1, 0.0},
  {"outer3_C", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0009_a2, 0.0},
  {"outer3_D", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0009_a3, 0.0},
  {"outer3_E", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0009_a4, 0.0},
};

static void tl_call_0009(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0009(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3], (const double* const*)T[4]);
}

static const long tl_alias_0010_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const long tl_alias_0010_a1[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0010_a2[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const tl_arg_desc tl_args_0010[] = {
  {"contract1_A", 0, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0010_a0, 0.0},
  {"contract1_B", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0010_a1, 0.0},
  {"contract1_E", 1, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0010_a2, 0.0},
};

static void tl_call_0010(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0010(N, T[0], (const double* const*)T[1], (const double* const*)T[2]);
}

static const long tl_alias_0011_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const long tl_alias_0011_a1[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0011_a2[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0011_a3[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const tl_arg_desc tl_args_0011[] = {
  {"contract2_A", 0, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0011_a0, 0.0},
  {"contract2_C", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0011_a1, 0.0},
  {"contract2_B", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0011_a2, 0.0},
  {"contract2_E", 1, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0011_a3, 0.0},
};

static void tl_call_0011(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0011(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3]);
}

static const long tl_alias_0012_a0[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const long tl_alias_0012_a1[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0012_a2[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0012_a3[] = {0,1,2,3,4,5,6,7,8};
static const long tl_alias_0012_a4[] = {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,63,64,65,66,67,68,69,70,71,72,73,74,75,76,77,78,79,80};
static const tl_arg_desc tl_args_0012[] = {
  {"contract3_A", 0, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0012_a0, 0.0},
  {"contract3_D", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0012_a1, 0.0},
  {"contract3_C", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0012_a2, 0.0},
  {"contract3_B", 1, 3, 2, 0, 0, NULL, 0, NULL, 9, 9, tl_alias_0012_a3, 0.0},
  {"contract3_E", 1, 3, 4, 0, 0, NULL, 0, NULL, 81, 81, tl_alias_0012_a4, 0.0},
};

static void tl_call_0012(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0012(N, T[0], (const double* const*)T[1], (const double* const*)T[2], (const double* const*)T[3], (const double* const*)T[4]);
}

static const unsigned char tl_osym_0013_a0[] = {0,1};
static const long tl_alias_0013_a0[] = {0,1,2,1,3,4,2,4,5};
static const unsigned char tl_osym_0013_a3[] = {0,1};
static const long tl_alias_0013_a3[] = {0,1,2,1,3,4,2,4,5};
static const long tl_alias_0013_a4[] = {0,1,2};
static const tl_arg_desc tl_args_0013[] = {
  {"kij_K", 0, 3, 2, 0, 1, tl_osym_0013_a0, 0, NULL, 6, 9, tl_alias_0013_a0, 0.0},
  {"d0", 3, 0, 0, 0, 0, NULL, 0, NULL, 0, 0, NULL, 2.0},
  {"kij_alpha", 2, 0, 0, 0, 0, NULL, 0, NULL, 1, 1, NULL, 0.0},
  {"kij_g", 1, 3, 2, 0, 1, tl_osym_0013_a3, 0, NULL, 6, 9, tl_alias_0013_a3, 0.0},
  {"kij_beta", 1, 3, 1, 0, 0, NULL, 0, NULL, 3, 3, tl_alias_0013_a4, 0.0},
};

static void tl_call_0013(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0013(N, T[0], D[0], S[0], (const double* const*)T[1], (const double* const*)T[2]);
}

static const unsigned char tl_osym_0014_a0[] = {1,2};
static const long tl_alias_0014_a0[] = {0,1,2,3,4,5,6,7,8,3,4,5,9,10,11,12,13,14,6,7,8,12,13,14,15,16,17};
static const unsigned char tl_osym_0014_a2[] = {0,1};
static const long tl_alias_0014_a2[] = {0,1,2,1,3,4,2,4,5};
static const unsigned char tl_osym_0014_a3[] = {0,1};
static const long tl_alias_0014_a3[] = {0,3,6,3,9,12,6,12,15,1,4,7,4,10,13,7,13,16,2,5,8,5,11,14,8,14,17};
static const tl_arg_desc tl_args_0014[] = {
  {"christoffel_Gamma", 0, 3, 3, 0, 1, tl_osym_0014_a0, 0, NULL, 18, 27, tl_alias_0014_a0, 0.0},
  {"d0", 3, 0, 0, 0, 0, NULL, 0, NULL, 0, 0, NULL, 0.5},
  {"christoffel_Invg", 1, 3, 2, 0, 1, tl_osym_0014_a2, 0, NULL, 6, 9, tl_alias_0014_a2, 0.0},
  {"christoffel_dg", 1, 3, 2, 1, 1, tl_osym_0014_a3, 0, NULL, 18, 27, tl_alias_0014_a3, 0.0},
};

static void tl_call_0014(const long N, double** const* T,
                          const double* const* S, const double* D)
{
  (void)T; (void)S; (void)D;
  tl_0014(N, T[0], D[0], (const double* const*)T[1], (const double* const*)T[2]);
}

const tl_entry tloops_entries[] = {
  {1, "ASSIGN(set;LHS(assign1_A,3,[1,0],[],[vi+0]);LEAF(assign1_B,[vi+0]))", 2, tl_args_0001, tl_call_0001},
  {2, "ASSIGN(set;LHS(assign2_A,3,[2,0],[],[vi+0,vj+0]);LEAF(assign2_B,[vi+0,vj+0]))", 2, tl_args_0002, tl_call_0002},
  {3, "ASSIGN(set;LHS(assign3_A,3,[3,0],[],[vi+0,vj+0,vk+0]);LEAF(assign3_B,[vi+0,vj+0,vk+0]))", 2, tl_args_0003, tl_call_0003},
  {4, "ASSIGN(set;LHS(add1_A,3,[1,0],[],[vi+0]);ADD(LEAF(add1_B,[vi+0]);LEAF(add1_C,[vi+0])))", 3, tl_args_0004, tl_call_0004},
  {5, "ASSIGN(set;LHS(add2_A,3,[1,0],[],[vi+0]);ADD(ADD(LEAF(add2_B,[vi+0]);LEAF(add2_C,[vi+0]));LEAF(add2_D,[vi+0])))", 4, tl_args_0005, tl_call_0005},
  {6, "ASSIGN(set;LHS(add3_A,3,[1,0],[],[vi+0]);ADD(ADD(ADD(LEAF(add3_B,[vi+0]);LEAF(add3_C,[vi+0]));LEAF(add3_D,[vi+0]));LEAF(add3_E,[vi+0])))", 5, tl_args_0006, tl_call_0006},
  {7, "ASSIGN(set;LHS(outer1_A,3,[2,0],[],[vi+0,vj+0]);MUL(LEAF(outer1_B,[vi+0]);LEAF(outer1_C,[vj+0])))", 3, tl_args_0007, tl_call_0007},
  {8, "ASSIGN(set;LHS(outer2_A,3,[3,0],[],[vi+0,vj+0,vk+0]);MUL(MUL(LEAF(outer2_B,[vi+0]);LEAF(outer2_C,[vj+0]));LEAF(outer2_D,[vk+0])))", 4, tl_args_0008, tl_call_0008},
  {9, "ASSIGN(set;LHS(outer3_A,3,[4,0],[],[vi+0,vj+0,vk+0,vl+0]);MUL(MUL(MUL(LEAF(outer3_B,[vi+0]);LEAF(outer3_C,[vj+0]));LEAF(outer3_D,[vk+0]));LEAF(outer3_E,[vl+0])))", 5, tl_args_0009, tl_call_0009},
  {10, "ASSIGN(set;LHS(contract1_A,3,[4,0],[],[vi+0,vj+0,vk+0,vl+0]);SUM(m,3;MUL(LEAF(contract1_B,[vi+0,vm+0]);LEAF(contract1_E,[vm+0,vj+0,vk+0,vl+0]))))", 3, tl_args_0010, tl_call_0010},
  {11, "ASSIGN(set;LHS(contract2_A,3,[4,0],[],[vi+0,vj+0,vk+0,vl+0]);SUM(m,3;SUM(n,3;MUL(MUL(LEAF(contract2_C,[vj+0,vn+0]);LEAF(contract2_B,[vi+0,vm+0]));LEAF(contract2_E,[vm+0,vn+0,vk+0,vl+0])))))", 4, tl_args_0011, tl_call_0011},
  {12, "ASSIGN(set;LHS(contract3_A,3,[4,0],[],[vi+0,vj+0,vk+0,vl+0]);SUM(m,3;SUM(n,3;SUM(o,3;MUL(MUL(MUL(LEAF(contract3_D,[vk+0,vo+0]);LEAF(contract3_C,[vj+0,vn+0]));LEAF(contract3_B,[vi+0,vm+0]));LEAF(contract3_E,[vm+0,vn+0,vo+0,vl+0]))))))", 5, tl_args_0012, tl_call_0012},
  {13, "ASSIGN(set;LHS(kij_K,3,[2,0],[(0,1)],[vi+0,vj+0]);ADD(MUL(MUL(CONST(2.0);SFIELD(kij_alpha));LEAF(kij_g,[vi+0,vj+0]));MUL(LEAF(kij_beta,[vi+0]);LEAF(kij_beta,[vj+0]))))", 5, tl_args_0013, tl_call_0013},
  {14, "ASSIGN(set;LHS(christoffel_Gamma,3,[3,0],[(1,2)],[vi+0,vj+0,vk+0]);MUL(CONST(0.5);SUM(l,3;MUL(LEAF(christoffel_Invg,[vi+0,vl+0]);SUB(ADD(LEAF(christoffel_dg,[vj+0,vl+0],[vk+0]);LEAF(christoffel_dg,[vl+0,vk+0],[vj+0]));LEAF(christoffel_dg,[vj+0,vk+0],[vl+0]))))))", 4, tl_args_0014, tl_call_0014},
};
const int tloops_entry_count = 14;
