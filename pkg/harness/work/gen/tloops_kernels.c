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

void tl_0002(const long N, double* const* L, const double* const* R0)
{
  for(int j=0; j<3; ++j) {
    for(int i=0; i<3; ++i) {
      for(long x=0; x<N; ++x) {
        L[i+3*j][x] = R0[i+3*j][x];
      }
    }
  }
}

void tl_0003(const long N, double* const* L, const double* const* R0)
{
  for(int k=0; k<3; ++k) {
    for(int j=0; j<3; ++j) {
      for(int i=0; i<3; ++i) {
        for(long x=0; x<N; ++x) {
          L[i+3*j+9*k][x] = R0[i+3*j+9*k][x];
        }
      }
    }
  }
}

void tl_0004(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  for(int i=0; i<3; ++i) {
    for(long x=0; x<N; ++x) {
      L[i][x] = (R0[i][x] + R1[i][x]);
    }
  }
}

void tl_0005(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  for(int i=0; i<3; ++i) {
    for(long x=0; x<N; ++x) {
      L[i][x] = ((R0[i][x] + R1[i][x]) + R2[i][x]);
    }
  }
}

void tl_0006(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  for(int i=0; i<3; ++i) {
    for(long x=0; x<N; ++x) {
      L[i][x] = (((R0[i][x] + R1[i][x]) + R2[i][x]) + R3[i][x]);
    }
  }
}

void tl_0007(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  for(int j=0; j<3; ++j) {
    for(int i=0; i<3; ++i) {
      for(long x=0; x<N; ++x) {
        L[i+3*j][x] = (R0[i][x]*R1[j][x]);
      }
    }
  }
}

void tl_0008(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  for(int k=0; k<3; ++k) {
    for(int j=0; j<3; ++j) {
      for(int i=0; i<3; ++i) {
        for(long x=0; x<N; ++x) {
          L[i+3*j+9*k][x] = ((R0[i][x]*R1[j][x])*R2[k][x]);
        }
      }
    }
  }
}

void tl_0009(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  for(int l=0; l<3; ++l) {
    for(int k=0; k<3; ++k) {
      for(int j=0; j<3; ++j) {
        for(int i=0; i<3; ++i) {
          for(long x=0; x<N; ++x) {
            L[i+3*j+9*k+27*l][x] = (((R0[i][x]*R1[j][x])*R2[k][x])*R3[l][x]);
          }
        }
      }
    }
  }
}

void tl_0010(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  for(int l=0; l<3; ++l) {
    for(int k=0; k<3; ++k) {
      for(int j=0; j<3; ++j) {
        for(int i=0; i<3; ++i) {
          for(long x=0; x<N; ++x) {
            double s0 = 0;
            for(int m=0; m<3; ++m) {
              s0 += (R0[i+3*m][x]*R1[m+3*j+9*k+27*l][x]);
            }
            L[i+3*j+9*k+27*l][x] = s0;
          }
        }
      }
    }
  }
}

void tl_0011(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  for(int l=0; l<3; ++l) {
    for(int k=0; k<3; ++k) {
      for(int j=0; j<3; ++j) {
        for(int i=0; i<3; ++i) {
          for(long x=0; x<N; ++x) {
            double s0 = 0;
            for(int m=0; m<3; ++m) {
              double s1 = 0;
              for(int n=0; n<3; ++n) {
                s1 += ((R0[j+3*n][x]*R1[i+3*m][x])*R2[m+3*n+9*k+27*l][x]);
              }
              s0 += s1;
            }
            L[i+3*j+9*k+27*l][x] = s0;
          }
        }
      }
    }
  }
}

void tl_0012(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  for(int l=0; l<3; ++l) {
    for(int k=0; k<3; ++k) {
      for(int j=0; j<3; ++j) {
        for(int i=0; i<3; ++i) {
          for(long x=0; x<N; ++x) {
            double s0 = 0;
            for(int m=0; m<3; ++m) {
              double s1 = 0;
              for(int n=0; n<3; ++n) {
                double s2 = 0;
                for(int o=0; o<3; ++o) {
                  s2 += (((R0[k+3*o][x]*R1[j+3*n][x])*R2[i+3*m][x])*R3[m+3*n+9*o+27*l][x]);
                }
                s1 += s2;
              }
              s0 += s1;
            }
            L[i+3*j+9*k+27*l][x] = s0;
          }
        }
      }
    }
  }
}

void tl_0013(const long N, double* const* L, const double d0, const double* F0, const double* const* R0, const double* const* R1)
{
  for(int j=0; j<3; ++j) {
    for(int i=j; i<3; ++i) {
      for(long x=0; x<N; ++x) {
        L[i+3*j][x] = (((d0*F0[x])*R0[i+3*j][x]) + (R1[i][x]*R1[j][x]));
      }
    }
  }
}

void tl_0014(const long N, double* const* L, const double d0, const double* const* R0, const double* const* R1)
{
  for(int k=0; k<3; ++k) {
    for(int j=k; j<3; ++j) {
      for(int i=0; i<3; ++i) {
        for(long x=0; x<N; ++x) {
          double s0 = 0;
          for(int l=0; l<3; ++l) {
            s0 += (R0[i+3*l][x]*((R1[j+3*l+9*k][x] + R1[l+3*k+9*j][x]) - R1[j+3*k+9*l][x]));
          }
          L[i+3*j+9*k][x] = (d0*s0);
        }
      }
    }
  }
}
