#include "ratiodist/parallel.hpp"

#include <omp.h>

namespace ratiodist {

int max_threads() { return omp_get_max_threads(); }

void set_max_threads(int n) {
  if (n >= 1) omp_set_num_threads(n);
}

}  // namespace ratiodist
