// Samples points from a random transversal arrangement, then recovers the
// subspace dimensions from the points alone.
//
//   recover_from_points [n] [dim...] [--seed s]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ahilb/gpca.hpp"

int main(int argc, char** argv) {
  std::size_t n = 4;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
    else if (i == 1)
      n = std::strtoul(argv[i], nullptr, 10);
    else
      dims.push_back(std::strtoul(argv[i], nullptr, 10));
  }
  if (dims.empty()) dims = {1, 2, 3};

  try {
    const auto a = ahilb::random_arrangement(n, dims, seed);
    const auto d = ahilb::dimension_function(a);
    std::cout << "true dimensions:";
    for (std::size_t k : dims) std::cout << ' ' << k;
    std::cout << (ahilb::is_transversal(d) ? " (transversal)" : " (not transversal)") << "\n";

    const std::size_t m = dims.size();
    const auto cloud = ahilb::sample_points(a, ahilb::monomial_count(n - 1, m + n - 1) + 5, seed);
    const auto r = ahilb::end_to_end_recover(cloud, m);
    std::cout << "points: " << cloud.size() << "\nh_I(d), d = " << m << "..:";
    for (const auto& v : r.values) std::cout << ' ' << v;
    std::cout << "\nrecovered dimensions:";
    for (std::size_t k : r.dims(n)) std::cout << ' ' << k;
    std::cout << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
