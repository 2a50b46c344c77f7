// Regenerates the shipped Gaussian experiment configs:
//   make_figure_configs <out_dir>
// writes gaussian_strongly_connected.json and gaussian_cycle.json.

#include <iostream>
#include <string>

#include "pawbar/config.hpp"
#include "pawbar/error.hpp"
#include "pawbar/measure_io.hpp"
#include "pawbar/scenarios.hpp"

namespace {

constexpr std::uint64_t kStronglyConnectedSeed = 20210601;
constexpr std::uint64_t kCycleSeed = 20210602;

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <out_dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  try {
    pawbar::write_file(dir + "/gaussian_strongly_connected.json",
                       pawbar::serialize_config(pawbar::scenarios::gaussian_figure_config(true, kStronglyConnectedSeed)));
    pawbar::write_file(dir + "/gaussian_cycle.json",
                       pawbar::serialize_config(pawbar::scenarios::gaussian_figure_config(false, kCycleSeed)));
  } catch (const pawbar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
