#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace hullwalk::rational {

using Rat = boost::multiprecision::cpp_rational;

// (2n-1)!!/(2n)!! with the conventions (-1)!! = 0!! = 1; n = 0 gives 1
Rat dfac_ratio(int n);

// sum_{k=1}^n (2n-2k-1)!!/(k (2n-2k)!!)
Rat theorem1_prob(int n);

// sum_{k=1}^n 1/(k(n-k+1))
Rat bridge_prob(int n);

// 2^{-(n-1)} sum_{k=0}^{d-1} C(n-1, k)
Rat wendel_prob(int n, int d);

// 2 * a_{i_1} * a_{n-i_d} * prod 1/(i_{k+1}-i_k)
Rat face_prob_pinned(int n, const std::vector<int>& indices);

// 2 / (prod gaps * (n - i_d + i_1 + 1))
Rat face_prob_bridge(int n, const std::vector<int>& indices);

// 2 sum_{j_1+...+j_{d-1} <= n} prod 1/j_i
Rat expected_faces(int n, int d);

// 2 sum_{1 <= i_2 < ... < i_d <= n} a_{n-i_d} / (i_2 prod (i_{k+1}-i_k));
// zero for n <= d-1. d = 1 gives 2 a_n.
Rat expected_faces_at_origin(int n, int d);

Rat spherical_U(int n, int k);  // k in {1, 2}

}  // namespace hullwalk::rational
