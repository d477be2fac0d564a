// Solves the pentadiagonal Laplacian system of size n (default 8) with a
// right-hand side of ones, in exact and floating-point arithmetic.
#include <cstdlib>
#include <iostream>
#include <vector>

#include "bpenta/bpenta.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;

  const auto exact = bpenta::laplacian_system<bpenta::BigRational>(n, std::vector<bpenta::BigRational>(n, 1));
  const auto r = bpenta::solve(exact);
  std::cout << "exact:";
  for (const auto& v : r.report.x) std::cout << ' ' << v.to_string();
  std::cout << "\ndet(A1) = " << r.report.det_a1.to_string() << '\n';

  const auto approx = bpenta::laplacian_system<double>(n, std::vector<double>(n, 1.0));
  const auto f = bpenta::solve(approx);
  std::cout << "float:";
  for (double v : f.report.x) std::cout << ' ' << bpenta::format_scalar(v);
  std::cout << '\n';
}
