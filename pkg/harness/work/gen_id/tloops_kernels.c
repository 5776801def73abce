#include <math.h>

#include "tloops_kernels.h"

void tl_0001(const long N, double* const* L, const double* const* R0)
{
  for(int i=0; i<3; ++i) {
    for(long x=0; x<N; ++x) {
      L[i][x] = R0[i][x];
    }
  }
}
