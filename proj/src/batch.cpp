#include "lcmsim/batch.hpp"

namespace lcmsim::batch {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lcmsim::batch
