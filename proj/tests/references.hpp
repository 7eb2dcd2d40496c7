#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace testing {

// Moments of exp(alpha A^+ - alpha^* A)|0> evaluated at 50 digits (mpmath)
// on 160 levels.
struct MomentReference {
  int p;
  std::complex<double> alpha;
  double mean_n, var_n, q, mean_x, mean_y, var_x, var_y, product, bound;
};

inline const std::vector<MomentReference> kMomentReferences = {
    {2, std::sqrt(10.0), 11.233303491811090015, 18.298753270112413297, 0.62897346123087748305, 4.586976334102746711,
     0.0, 2.4262550940035070111, 1.0, 1.5576440845082380407, 0.48641821152694308457},
    {4, 1.0, 1.9599821118481133885, 1.4184915624033676849, -0.27627320992953424736, 1.4991043226159865055, 0.0,
     3.6726504536102910274, 2.0, 2.7102215605408687795, 0.040017888151886611477},
    {3, {1.0, 1.0}, 2.9816843611112658197, 3.2194522040369076517, 0.079742794383851679798, 1.4660180122130469707,
     1.4660180122130469707, 2.3324755489781722826, 2.3324755489781722826, 2.3324755489781722826,
     0.37179052777886073794},
    {6, {0.0, std::sqrt(15.0)}, 15.624373174339071075, 35.010962407879281429, 1.2407914875830073316, 0.0,
     5.4777310032368602615, 3.0, 4.2432094048558425457, 3.5678604533484108278, 0.49973895846139109276},
    {5, 0.5, 0.91666666666666666667, 0.37943291670502186114, -0.58607318177633978785, 1.8507919611341565864, 0.0,
     0.90790244993451594916, 2.5, 1.5065709823424483682, 0.30870754628351123147},
};

}  // namespace testing
