#include "mhtest/reference_tables.hpp"

#include <string>

#include "mhtest/error.hpp"

namespace mhtest {

namespace {

// Published rejection rates at alpha = 0.05.
constexpr ReferenceCell kCells[] = {
    {TableId::tab8, TestId::wk, 1, 5, 20, 5, 10, Pi0::none, 0.038},
    {TableId::tab8, TestId::wk, 1, 10, 20, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 20, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 200, 5, 10, Pi0::none, 0.058},
    {TableId::tab8, TestId::wk, 1, 10, 200, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 200, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 20, 10, 10, Pi0::none, 0.061},
    {TableId::tab8, TestId::wk, 1, 10, 20, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 20, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 200, 10, 10, Pi0::none, 0.155},
    {TableId::tab8, TestId::wk, 1, 10, 200, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 200, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 20, 20, 30, Pi0::none, 0.064},
    {TableId::tab8, TestId::wk, 1, 10, 20, 20, 30, Pi0::none, 0.052},
    {TableId::tab8, TestId::wk, 1, 20, 20, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 200, 20, 30, Pi0::none, 0.106},
    {TableId::tab8, TestId::wk, 1, 10, 200, 20, 30, Pi0::none, 0.08},
    {TableId::tab8, TestId::wk, 1, 20, 200, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 20, 30, 30, Pi0::none, 0.065},
    {TableId::tab8, TestId::wk, 1, 10, 20, 30, 30, Pi0::none, 0.052},
    {TableId::tab8, TestId::wk, 1, 20, 20, 30, 30, Pi0::none, 0.003},
    {TableId::tab8, TestId::wk, 1, 5, 200, 30, 30, Pi0::none, 0.098},
    {TableId::tab8, TestId::wk, 1, 10, 200, 30, 30, Pi0::none, 0.093},
    {TableId::tab8, TestId::wk, 1, 20, 200, 30, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 50, 5, 10, Pi0::none, 0.034},
    {TableId::tab8, TestId::wk, 1, 10, 50, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 50, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 500, 5, 10, Pi0::none, 0.1},
    {TableId::tab8, TestId::wk, 1, 10, 500, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 500, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 50, 10, 10, Pi0::none, 0.081},
    {TableId::tab8, TestId::wk, 1, 10, 50, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 50, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 500, 10, 10, Pi0::none, 0.302},
    {TableId::tab8, TestId::wk, 1, 10, 500, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 500, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 50, 20, 30, Pi0::none, 0.074},
    {TableId::tab8, TestId::wk, 1, 10, 50, 20, 30, Pi0::none, 0.054},
    {TableId::tab8, TestId::wk, 1, 20, 50, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 500, 20, 30, Pi0::none, 0.154},
    {TableId::tab8, TestId::wk, 1, 10, 500, 20, 30, Pi0::none, 0.14},
    {TableId::tab8, TestId::wk, 1, 20, 500, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 50, 30, 30, Pi0::none, 0.073},
    {TableId::tab8, TestId::wk, 1, 10, 50, 30, 30, Pi0::none, 0.058},
    {TableId::tab8, TestId::wk, 1, 20, 50, 30, 30, Pi0::none, 0.001},
    {TableId::tab8, TestId::wk, 1, 5, 500, 30, 30, Pi0::none, 0.128},
    {TableId::tab8, TestId::wk, 1, 10, 500, 30, 30, Pi0::none, 0.152},
    {TableId::tab8, TestId::wk, 1, 20, 500, 30, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 100, 5, 10, Pi0::none, 0.048},
    {TableId::tab8, TestId::wk, 1, 10, 100, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 100, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 750, 5, 10, Pi0::none, 0.133},
    {TableId::tab8, TestId::wk, 1, 10, 750, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 750, 5, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 100, 10, 10, Pi0::none, 0.105},
    {TableId::tab8, TestId::wk, 1, 10, 100, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 100, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 750, 10, 10, Pi0::none, 0.411},
    {TableId::tab8, TestId::wk, 1, 10, 750, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 20, 750, 10, 10, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 100, 20, 30, Pi0::none, 0.084},
    {TableId::tab8, TestId::wk, 1, 10, 100, 20, 30, Pi0::none, 0.068},
    {TableId::tab8, TestId::wk, 1, 20, 100, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 750, 20, 30, Pi0::none, 0.192},
    {TableId::tab8, TestId::wk, 1, 10, 750, 20, 30, Pi0::none, 0.178},
    {TableId::tab8, TestId::wk, 1, 20, 750, 20, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 100, 30, 30, Pi0::none, 0.075},
    {TableId::tab8, TestId::wk, 1, 10, 100, 30, 30, Pi0::none, 0.074},
    {TableId::tab8, TestId::wk, 1, 20, 100, 30, 30, Pi0::none, 0.0},
    {TableId::tab8, TestId::wk, 1, 5, 750, 30, 30, Pi0::none, 0.156},
    {TableId::tab8, TestId::wk, 1, 10, 750, 30, 30, Pi0::none, 0.199},
    {TableId::tab8, TestId::wk, 1, 20, 750, 30, 30, Pi0::none, 0.0},
    {TableId::tab88, TestId::wk_prime, 1, 5, 20, 5, 10, Pi0::none, 0.055},
    {TableId::tab88, TestId::wk_prime, 1, 10, 20, 5, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 20, 5, 10, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 5, 200, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 200, 5, 10, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 20, 200, 5, 10, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 5, 20, 10, 10, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 10, 20, 10, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 20, 10, 10, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 5, 200, 10, 10, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 10, 200, 10, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 200, 10, 10, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 5, 20, 20, 30, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 10, 20, 20, 30, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 20, 20, 20, 30, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 200, 20, 30, Pi0::none, 0.047},
    {TableId::tab88, TestId::wk_prime, 1, 10, 200, 20, 30, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 20, 200, 20, 30, Pi0::none, 0.047},
    {TableId::tab88, TestId::wk_prime, 1, 5, 20, 30, 30, Pi0::none, 0.058},
    {TableId::tab88, TestId::wk_prime, 1, 10, 20, 30, 30, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 20, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 5, 200, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 200, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 5, 50, 5, 10, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 10, 50, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 50, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 5, 500, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 500, 5, 10, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 20, 500, 5, 10, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 5, 50, 10, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 10, 50, 10, 10, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 20, 50, 10, 10, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 500, 10, 10, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 50, 20, 30, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 10, 50, 20, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 20, 50, 20, 30, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 5, 500, 20, 30, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 10, 500, 20, 30, Pi0::none, 0.054},
    {TableId::tab88, TestId::wk_prime, 1, 20, 500, 20, 30, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 50, 30, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 10, 50, 30, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 20, 50, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 5, 500, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 500, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 500, 30, 30, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 5, 100, 5, 10, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 10, 100, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 100, 5, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 5, 750, 5, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 10, 750, 5, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 750, 5, 10, Pi0::none, 0.05},
    {TableId::tab88, TestId::wk_prime, 1, 5, 100, 10, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 10, 100, 10, 10, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 100, 10, 10, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 750, 10, 10, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 750, 10, 10, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 20, 750, 10, 10, Pi0::none, 0.047},
    {TableId::tab88, TestId::wk_prime, 1, 5, 100, 20, 30, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 10, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 20, 100, 20, 30, Pi0::none, 0.048},
    {TableId::tab88, TestId::wk_prime, 1, 5, 750, 20, 30, Pi0::none, 0.047},
    {TableId::tab88, TestId::wk_prime, 1, 10, 750, 20, 30, Pi0::none, 0.053},
    {TableId::tab88, TestId::wk_prime, 1, 20, 750, 20, 30, Pi0::none, 0.049},
    {TableId::tab88, TestId::wk_prime, 1, 5, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 10, 100, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab88, TestId::wk_prime, 1, 5, 750, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 10, 750, 30, 30, Pi0::none, 0.051},
    {TableId::tab88, TestId::wk_prime, 1, 20, 750, 30, 30, Pi0::none, 0.052},
    {TableId::trv1, TestId::vk, 1, 5, 20, 5, 10, Pi0::none, 0.735},
    {TableId::trv1, TestId::vk, 1, 10, 20, 5, 10, Pi0::none, 0.226},
    {TableId::trv1, TestId::vk, 1, 20, 20, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 200, 5, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 200, 5, 10, Pi0::none, 0.813},
    {TableId::trv1, TestId::vk, 1, 20, 200, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 20, 10, 10, Pi0::none, 0.665},
    {TableId::trv1, TestId::vk, 1, 10, 20, 10, 10, Pi0::none, 0.824},
    {TableId::trv1, TestId::vk, 1, 20, 20, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 200, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 200, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 200, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 20, 20, 30, Pi0::none, 0.281},
    {TableId::trv1, TestId::vk, 1, 10, 20, 20, 30, Pi0::none, 0.76},
    {TableId::trv1, TestId::vk, 1, 20, 20, 20, 30, Pi0::none, 0.968},
    {TableId::trv1, TestId::vk, 1, 5, 200, 20, 30, Pi0::none, 0.714},
    {TableId::trv1, TestId::vk, 1, 10, 200, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 200, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 20, 30, 30, Pi0::none, 0.228},
    {TableId::trv1, TestId::vk, 1, 10, 20, 30, 30, Pi0::none, 0.624},
    {TableId::trv1, TestId::vk, 1, 20, 20, 30, 30, Pi0::none, 0.982},
    {TableId::trv1, TestId::vk, 1, 5, 200, 30, 30, Pi0::none, 0.542},
    {TableId::trv1, TestId::vk, 1, 10, 200, 30, 30, Pi0::none, 0.997},
    {TableId::trv1, TestId::vk, 1, 20, 200, 30, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 50, 5, 10, Pi0::none, 0.958},
    {TableId::trv1, TestId::vk, 1, 10, 50, 5, 10, Pi0::none, 0.379},
    {TableId::trv1, TestId::vk, 1, 20, 50, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 500, 5, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 500, 5, 10, Pi0::none, 0.951},
    {TableId::trv1, TestId::vk, 1, 20, 500, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 50, 10, 10, Pi0::none, 0.908},
    {TableId::trv1, TestId::vk, 1, 10, 50, 10, 10, Pi0::none, 0.985},
    {TableId::trv1, TestId::vk, 1, 20, 50, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 500, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 500, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 500, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 50, 20, 30, Pi0::none, 0.395},
    {TableId::trv1, TestId::vk, 1, 10, 50, 20, 30, Pi0::none, 0.961},
    {TableId::trv1, TestId::vk, 1, 20, 50, 20, 30, Pi0::none, 0.999},
    {TableId::trv1, TestId::vk, 1, 5, 500, 20, 30, Pi0::none, 0.936},
    {TableId::trv1, TestId::vk, 1, 10, 500, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 500, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 50, 30, 30, Pi0::none, 0.297},
    {TableId::trv1, TestId::vk, 1, 10, 50, 30, 30, Pi0::none, 0.875},
    {TableId::trv1, TestId::vk, 1, 20, 50, 30, 30, Pi0::none, 0.999},
    {TableId::trv1, TestId::vk, 1, 5, 500, 30, 30, Pi0::none, 0.784},
    {TableId::trv1, TestId::vk, 1, 10, 500, 30, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 500, 30, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 100, 5, 10, Pi0::none, 0.993},
    {TableId::trv1, TestId::vk, 1, 10, 100, 5, 10, Pi0::none, 0.574},
    {TableId::trv1, TestId::vk, 1, 20, 100, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 750, 5, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 750, 5, 10, Pi0::none, 0.993},
    {TableId::trv1, TestId::vk, 1, 20, 750, 5, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 100, 10, 10, Pi0::none, 0.99},
    {TableId::trv1, TestId::vk, 1, 10, 100, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 100, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 750, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 10, 750, 10, 10, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 750, 10, 10, Pi0::none, 0.0},
    {TableId::trv1, TestId::vk, 1, 5, 100, 20, 30, Pi0::none, 0.53},
    {TableId::trv1, TestId::vk, 1, 10, 100, 20, 30, Pi0::none, 0.994},
    {TableId::trv1, TestId::vk, 1, 20, 100, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 750, 20, 30, Pi0::none, 0.954},
    {TableId::trv1, TestId::vk, 1, 10, 750, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 750, 20, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 100, 30, 30, Pi0::none, 0.392},
    {TableId::trv1, TestId::vk, 1, 10, 100, 30, 30, Pi0::none, 0.977},
    {TableId::trv1, TestId::vk, 1, 20, 100, 30, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 5, 750, 30, 30, Pi0::none, 0.889},
    {TableId::trv1, TestId::vk, 1, 10, 750, 30, 30, Pi0::none, 1.0},
    {TableId::trv1, TestId::vk, 1, 20, 750, 30, 30, Pi0::none, 1.0},
    {TableId::trv2, TestId::vk_prime, 1, 5, 20, 5, 10, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 10, 20, 5, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 20, 20, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 5, 200, 5, 10, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 10, 200, 5, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 20, 200, 5, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 5, 20, 10, 10, Pi0::none, 0.055},
    {TableId::trv2, TestId::vk_prime, 1, 10, 20, 10, 10, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 20, 20, 10, 10, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 5, 200, 10, 10, Pi0::none, 0.047},
    {TableId::trv2, TestId::vk_prime, 1, 10, 200, 10, 10, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 20, 200, 10, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 5, 20, 20, 30, Pi0::none, 0.056},
    {TableId::trv2, TestId::vk_prime, 1, 10, 20, 20, 30, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 20, 20, 20, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 5, 200, 20, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 10, 200, 20, 30, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 20, 200, 20, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 5, 20, 30, 30, Pi0::none, 0.058},
    {TableId::trv2, TestId::vk_prime, 1, 10, 20, 30, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 20, 20, 30, 30, Pi0::none, 0.056},
    {TableId::trv2, TestId::vk_prime, 1, 5, 200, 30, 30, Pi0::none, 0.056},
    {TableId::trv2, TestId::vk_prime, 1, 10, 200, 30, 30, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 20, 200, 30, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 5, 50, 5, 10, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 10, 50, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 20, 50, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 5, 500, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 10, 500, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 20, 500, 5, 10, Pi0::none, 0.046},
    {TableId::trv2, TestId::vk_prime, 1, 5, 50, 10, 10, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 10, 50, 10, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 20, 50, 10, 10, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 5, 500, 10, 10, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 10, 500, 10, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 20, 500, 10, 10, Pi0::none, 0.047},
    {TableId::trv2, TestId::vk_prime, 1, 5, 50, 20, 30, Pi0::none, 0.055},
    {TableId::trv2, TestId::vk_prime, 1, 10, 50, 20, 30, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 20, 50, 20, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 5, 500, 20, 30, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 10, 500, 20, 30, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 20, 500, 20, 30, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 5, 50, 30, 30, Pi0::none, 0.056},
    {TableId::trv2, TestId::vk_prime, 1, 10, 50, 30, 30, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 20, 50, 30, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 5, 500, 30, 30, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 10, 500, 30, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 20, 500, 30, 30, Pi0::none, 0.047},
    {TableId::trv2, TestId::vk_prime, 1, 5, 100, 5, 10, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 10, 100, 5, 10, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 20, 100, 5, 10, Pi0::none, 0.054},
    {TableId::trv2, TestId::vk_prime, 1, 5, 750, 5, 10, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 10, 750, 5, 10, Pi0::none, 0.048},
    {TableId::trv2, TestId::vk_prime, 1, 20, 750, 5, 10, Pi0::none, 0.047},
    {TableId::trv2, TestId::vk_prime, 1, 5, 100, 10, 10, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 10, 100, 10, 10, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 20, 100, 10, 10, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 5, 750, 10, 10, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 10, 750, 10, 10, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 20, 750, 10, 10, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 5, 100, 20, 30, Pi0::none, 0.051},
    {TableId::trv2, TestId::vk_prime, 1, 10, 100, 20, 30, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 20, 100, 20, 30, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 5, 750, 20, 30, Pi0::none, 0.052},
    {TableId::trv2, TestId::vk_prime, 1, 10, 750, 20, 30, Pi0::none, 0.053},
    {TableId::trv2, TestId::vk_prime, 1, 20, 750, 20, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 5, 100, 30, 30, Pi0::none, 0.056},
    {TableId::trv2, TestId::vk_prime, 1, 10, 100, 30, 30, Pi0::none, 0.05},
    {TableId::trv2, TestId::vk_prime, 1, 20, 100, 30, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 5, 750, 30, 30, Pi0::none, 0.049},
    {TableId::trv2, TestId::vk_prime, 1, 10, 750, 30, 30, Pi0::none, 0.047},
    {TableId::trv2, TestId::vk_prime, 1, 20, 750, 30, 30, Pi0::none, 0.048},
    {TableId::tab2, TestId::test1, 1, 5, 20, 5, 10, Pi0::none, 0.058},
    {TableId::tab2, TestId::test2, 1, 5, 20, 5, 10, Pi0::none, 0.063},
    {TableId::tab2, TestId::test3, 1, 5, 20, 5, 10, Pi0::none, 0.056},
    {TableId::tab2, TestId::test1, 1, 5, 200, 5, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test2, 1, 5, 200, 5, 10, Pi0::none, 0.056},
    {TableId::tab2, TestId::test3, 1, 5, 200, 5, 10, Pi0::none, 0.053},
    {TableId::tab2, TestId::test1, 1, 5, 20, 10, 10, Pi0::none, 0.057},
    {TableId::tab2, TestId::test2, 1, 5, 20, 10, 10, Pi0::none, 0.06},
    {TableId::tab2, TestId::test3, 1, 5, 20, 10, 10, Pi0::none, 0.055},
    {TableId::tab2, TestId::test1, 1, 5, 200, 10, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 200, 10, 10, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 200, 10, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 20, 20, 30, Pi0::none, 0.057},
    {TableId::tab2, TestId::test2, 1, 5, 20, 20, 30, Pi0::none, 0.058},
    {TableId::tab2, TestId::test3, 1, 5, 20, 20, 30, Pi0::none, 0.056},
    {TableId::tab2, TestId::test1, 1, 5, 200, 20, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 200, 20, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 200, 20, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 20, 30, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test2, 1, 5, 20, 30, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 20, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test1, 1, 5, 200, 30, 30, Pi0::none, 0.049},
    {TableId::tab2, TestId::test2, 1, 5, 200, 30, 30, Pi0::none, 0.05},
    {TableId::tab2, TestId::test3, 1, 5, 200, 30, 30, Pi0::none, 0.049},
    {TableId::tab2, TestId::test1, 1, 5, 50, 5, 10, Pi0::none, 0.056},
    {TableId::tab2, TestId::test2, 1, 5, 50, 5, 10, Pi0::none, 0.06},
    {TableId::tab2, TestId::test3, 1, 5, 50, 5, 10, Pi0::none, 0.055},
    {TableId::tab2, TestId::test1, 1, 5, 500, 5, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 500, 5, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 500, 5, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 50, 10, 10, Pi0::none, 0.056},
    {TableId::tab2, TestId::test2, 1, 5, 50, 10, 10, Pi0::none, 0.058},
    {TableId::tab2, TestId::test3, 1, 5, 50, 10, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab2, TestId::test2, 1, 5, 500, 10, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test3, 1, 5, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab2, TestId::test1, 1, 5, 50, 20, 30, Pi0::none, 0.055},
    {TableId::tab2, TestId::test2, 1, 5, 50, 20, 30, Pi0::none, 0.056},
    {TableId::tab2, TestId::test3, 1, 5, 50, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test3, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 50, 30, 30, Pi0::none, 0.055},
    {TableId::tab2, TestId::test2, 1, 5, 50, 30, 30, Pi0::none, 0.056},
    {TableId::tab2, TestId::test3, 1, 5, 50, 30, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test2, 1, 5, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test1, 1, 5, 100, 5, 10, Pi0::none, 0.055},
    {TableId::tab2, TestId::test2, 1, 5, 100, 5, 10, Pi0::none, 0.056},
    {TableId::tab2, TestId::test3, 1, 5, 100, 5, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 750, 5, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 750, 5, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 750, 5, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 100, 10, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test2, 1, 5, 100, 10, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 100, 10, 10, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 750, 10, 10, Pi0::none, 0.053},
    {TableId::tab2, TestId::test2, 1, 5, 750, 10, 10, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 750, 10, 10, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 100, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test2, 1, 5, 100, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 100, 20, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test1, 1, 5, 750, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test2, 1, 5, 750, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test3, 1, 5, 750, 20, 30, Pi0::none, 0.054},
    {TableId::tab2, TestId::test1, 1, 5, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 100, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test1, 1, 5, 750, 30, 30, Pi0::none, 0.052},
    {TableId::tab2, TestId::test2, 1, 5, 750, 30, 30, Pi0::none, 0.053},
    {TableId::tab2, TestId::test3, 1, 5, 750, 30, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test1, 1, 10, 20, 5, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 20, 5, 10, Pi0::none, 0.066},
    {TableId::tab3, TestId::test3, 1, 10, 20, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test1, 1, 10, 200, 5, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 200, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 200, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test1, 1, 10, 20, 10, 10, Pi0::none, 0.057},
    {TableId::tab3, TestId::test2, 1, 10, 20, 10, 10, Pi0::none, 0.062},
    {TableId::tab3, TestId::test3, 1, 10, 20, 10, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test1, 1, 10, 200, 10, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 200, 10, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test3, 1, 10, 200, 10, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test1, 1, 10, 20, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 20, 20, 30, Pi0::none, 0.056},
    {TableId::tab3, TestId::test3, 1, 10, 20, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 200, 20, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test2, 1, 10, 200, 20, 30, Pi0::none, 0.051},
    {TableId::tab3, TestId::test3, 1, 10, 200, 20, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test1, 1, 10, 20, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 20, 30, 30, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 20, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 200, 30, 30, Pi0::none, 0.051},
    {TableId::tab3, TestId::test2, 1, 10, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test3, 1, 10, 200, 30, 30, Pi0::none, 0.051},
    {TableId::tab3, TestId::test1, 1, 10, 50, 5, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test2, 1, 10, 50, 5, 10, Pi0::none, 0.058},
    {TableId::tab3, TestId::test3, 1, 10, 50, 5, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 500, 5, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test2, 1, 10, 500, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 500, 5, 10, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 50, 10, 10, Pi0::none, 0.052},
    {TableId::tab3, TestId::test2, 1, 10, 50, 10, 10, Pi0::none, 0.057},
    {TableId::tab3, TestId::test3, 1, 10, 50, 10, 10, Pi0::none, 0.052},
    {TableId::tab3, TestId::test1, 1, 10, 500, 10, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test2, 1, 10, 500, 10, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 500, 10, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test1, 1, 10, 50, 20, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test2, 1, 10, 50, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test3, 1, 10, 50, 20, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test1, 1, 10, 500, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 500, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test3, 1, 10, 500, 20, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 50, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 50, 30, 30, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 50, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 500, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 500, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test3, 1, 10, 500, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 100, 5, 10, Pi0::none, 0.051},
    {TableId::tab3, TestId::test2, 1, 10, 100, 5, 10, Pi0::none, 0.057},
    {TableId::tab3, TestId::test3, 1, 10, 100, 5, 10, Pi0::none, 0.052},
    {TableId::tab3, TestId::test1, 1, 10, 750, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test2, 1, 10, 750, 5, 10, Pi0::none, 0.053},
    {TableId::tab3, TestId::test3, 1, 10, 750, 5, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test1, 1, 10, 100, 10, 10, Pi0::none, 0.051},
    {TableId::tab3, TestId::test2, 1, 10, 100, 10, 10, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 100, 10, 10, Pi0::none, 0.051},
    {TableId::tab3, TestId::test1, 1, 10, 750, 10, 10, Pi0::none, 0.051},
    {TableId::tab3, TestId::test2, 1, 10, 750, 10, 10, Pi0::none, 0.052},
    {TableId::tab3, TestId::test3, 1, 10, 750, 10, 10, Pi0::none, 0.051},
    {TableId::tab3, TestId::test1, 1, 10, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test2, 1, 10, 100, 20, 30, Pi0::none, 0.053},
    {TableId::tab3, TestId::test3, 1, 10, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab3, TestId::test1, 1, 10, 750, 20, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test2, 1, 10, 750, 20, 30, Pi0::none, 0.051},
    {TableId::tab3, TestId::test3, 1, 10, 750, 20, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test1, 1, 10, 100, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test2, 1, 10, 100, 30, 30, Pi0::none, 0.055},
    {TableId::tab3, TestId::test3, 1, 10, 100, 30, 30, Pi0::none, 0.054},
    {TableId::tab3, TestId::test1, 1, 10, 750, 30, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test2, 1, 10, 750, 30, 30, Pi0::none, 0.05},
    {TableId::tab3, TestId::test3, 1, 10, 750, 30, 30, Pi0::none, 0.05},
    {TableId::tab4, TestId::test1, 1, 20, 20, 5, 10, Pi0::none, 0.047},
    {TableId::tab4, TestId::test2, 1, 20, 20, 5, 10, Pi0::none, 0.069},
    {TableId::tab4, TestId::test3, 1, 20, 20, 5, 10, Pi0::none, 0.054},
    {TableId::tab4, TestId::test1, 1, 20, 200, 5, 10, Pi0::none, 0.049},
    {TableId::tab4, TestId::test2, 1, 20, 200, 5, 10, Pi0::none, 0.056},
    {TableId::tab4, TestId::test3, 1, 20, 200, 5, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test1, 1, 20, 20, 10, 10, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 20, 10, 10, Pi0::none, 0.062},
    {TableId::tab4, TestId::test3, 1, 20, 20, 10, 10, Pi0::none, 0.05},
    {TableId::tab4, TestId::test1, 1, 20, 200, 10, 10, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 200, 10, 10, Pi0::none, 0.054},
    {TableId::tab4, TestId::test3, 1, 20, 200, 10, 10, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 20, 20, 30, Pi0::none, 0.055},
    {TableId::tab4, TestId::test2, 1, 20, 20, 20, 30, Pi0::none, 0.06},
    {TableId::tab4, TestId::test3, 1, 20, 20, 20, 30, Pi0::none, 0.056},
    {TableId::tab4, TestId::test1, 1, 20, 200, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 200, 20, 30, Pi0::none, 0.052},
    {TableId::tab4, TestId::test3, 1, 20, 200, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 20, 30, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 20, 30, 30, Pi0::none, 0.054},
    {TableId::tab4, TestId::test3, 1, 20, 20, 30, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 200, 30, 30, Pi0::none, 0.05},
    {TableId::tab4, TestId::test2, 1, 20, 200, 30, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test3, 1, 20, 200, 30, 30, Pi0::none, 0.05},
    {TableId::tab4, TestId::test1, 1, 20, 50, 5, 10, Pi0::none, 0.05},
    {TableId::tab4, TestId::test2, 1, 20, 50, 5, 10, Pi0::none, 0.062},
    {TableId::tab4, TestId::test3, 1, 20, 50, 5, 10, Pi0::none, 0.053},
    {TableId::tab4, TestId::test1, 1, 20, 500, 5, 10, Pi0::none, 0.048},
    {TableId::tab4, TestId::test2, 1, 20, 500, 5, 10, Pi0::none, 0.056},
    {TableId::tab4, TestId::test3, 1, 20, 500, 5, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test1, 1, 20, 50, 10, 10, Pi0::none, 0.055},
    {TableId::tab4, TestId::test2, 1, 20, 50, 10, 10, Pi0::none, 0.063},
    {TableId::tab4, TestId::test3, 1, 20, 50, 10, 10, Pi0::none, 0.055},
    {TableId::tab4, TestId::test1, 1, 20, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 500, 10, 10, Pi0::none, 0.053},
    {TableId::tab4, TestId::test3, 1, 20, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 50, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 50, 20, 30, Pi0::none, 0.054},
    {TableId::tab4, TestId::test3, 1, 20, 50, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 500, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 500, 20, 30, Pi0::none, 0.052},
    {TableId::tab4, TestId::test3, 1, 20, 500, 20, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 50, 30, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test2, 1, 20, 50, 30, 30, Pi0::none, 0.053},
    {TableId::tab4, TestId::test3, 1, 20, 50, 30, 30, Pi0::none, 0.051},
    {TableId::tab4, TestId::test1, 1, 20, 500, 30, 30, Pi0::none, 0.045},
    {TableId::tab4, TestId::test2, 1, 20, 500, 30, 30, Pi0::none, 0.045},
    {TableId::tab4, TestId::test3, 1, 20, 500, 30, 30, Pi0::none, 0.045},
    {TableId::tab4, TestId::test1, 1, 20, 100, 5, 10, Pi0::none, 0.046},
    {TableId::tab4, TestId::test2, 1, 20, 100, 5, 10, Pi0::none, 0.054},
    {TableId::tab4, TestId::test3, 1, 20, 100, 5, 10, Pi0::none, 0.049},
    {TableId::tab4, TestId::test1, 1, 20, 750, 5, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test2, 1, 20, 750, 5, 10, Pi0::none, 0.055},
    {TableId::tab4, TestId::test3, 1, 20, 750, 5, 10, Pi0::none, 0.054},
    {TableId::tab4, TestId::test1, 1, 20, 100, 10, 10, Pi0::none, 0.054},
    {TableId::tab4, TestId::test2, 1, 20, 100, 10, 10, Pi0::none, 0.057},
    {TableId::tab4, TestId::test3, 1, 20, 100, 10, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test1, 1, 20, 750, 10, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test2, 1, 20, 750, 10, 10, Pi0::none, 0.053},
    {TableId::tab4, TestId::test3, 1, 20, 750, 10, 10, Pi0::none, 0.052},
    {TableId::tab4, TestId::test1, 1, 20, 100, 20, 30, Pi0::none, 0.05},
    {TableId::tab4, TestId::test2, 1, 20, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab4, TestId::test3, 1, 20, 100, 20, 30, Pi0::none, 0.05},
    {TableId::tab4, TestId::test1, 1, 20, 750, 20, 30, Pi0::none, 0.053},
    {TableId::tab4, TestId::test2, 1, 20, 750, 20, 30, Pi0::none, 0.054},
    {TableId::tab4, TestId::test3, 1, 20, 750, 20, 30, Pi0::none, 0.054},
    {TableId::tab4, TestId::test1, 1, 20, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab4, TestId::test2, 1, 20, 100, 30, 30, Pi0::none, 0.053},
    {TableId::tab4, TestId::test3, 1, 20, 100, 30, 30, Pi0::none, 0.052},
    {TableId::tab4, TestId::test1, 1, 20, 750, 30, 30, Pi0::none, 0.048},
    {TableId::tab4, TestId::test2, 1, 20, 750, 30, 30, Pi0::none, 0.048},
    {TableId::tab4, TestId::test3, 1, 20, 750, 30, 30, Pi0::none, 0.047},
    {TableId::tab5, TestId::test1, 2, 5, 20, 5, 10, Pi0::none, 0.067},
    {TableId::tab5, TestId::test2, 2, 5, 20, 5, 10, Pi0::none, 0.072},
    {TableId::tab5, TestId::test3, 2, 5, 20, 5, 10, Pi0::none, 0.062},
    {TableId::tab5, TestId::test1, 2, 5, 200, 5, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test2, 2, 5, 200, 5, 10, Pi0::none, 0.06},
    {TableId::tab5, TestId::test3, 2, 5, 200, 5, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test1, 2, 5, 20, 10, 10, Pi0::none, 0.056},
    {TableId::tab5, TestId::test2, 2, 5, 20, 10, 10, Pi0::none, 0.06},
    {TableId::tab5, TestId::test3, 2, 5, 20, 10, 10, Pi0::none, 0.053},
    {TableId::tab5, TestId::test1, 2, 5, 200, 10, 10, Pi0::none, 0.057},
    {TableId::tab5, TestId::test2, 2, 5, 200, 10, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test3, 2, 5, 200, 10, 10, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 20, 20, 30, Pi0::none, 0.058},
    {TableId::tab5, TestId::test2, 2, 5, 20, 20, 30, Pi0::none, 0.06},
    {TableId::tab5, TestId::test3, 2, 5, 20, 20, 30, Pi0::none, 0.058},
    {TableId::tab5, TestId::test1, 2, 5, 200, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test2, 2, 5, 200, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 200, 20, 30, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 20, 30, 30, Pi0::none, 0.064},
    {TableId::tab5, TestId::test2, 2, 5, 20, 30, 30, Pi0::none, 0.064},
    {TableId::tab5, TestId::test3, 2, 5, 20, 30, 30, Pi0::none, 0.062},
    {TableId::tab5, TestId::test1, 2, 5, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab5, TestId::test2, 2, 5, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab5, TestId::test3, 2, 5, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab5, TestId::test1, 2, 5, 50, 5, 10, Pi0::none, 0.061},
    {TableId::tab5, TestId::test2, 2, 5, 50, 5, 10, Pi0::none, 0.065},
    {TableId::tab5, TestId::test3, 2, 5, 50, 5, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test1, 2, 5, 500, 5, 10, Pi0::none, 0.051},
    {TableId::tab5, TestId::test2, 2, 5, 500, 5, 10, Pi0::none, 0.052},
    {TableId::tab5, TestId::test3, 2, 5, 500, 5, 10, Pi0::none, 0.051},
    {TableId::tab5, TestId::test1, 2, 5, 50, 10, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test2, 2, 5, 50, 10, 10, Pi0::none, 0.06},
    {TableId::tab5, TestId::test3, 2, 5, 50, 10, 10, Pi0::none, 0.057},
    {TableId::tab5, TestId::test1, 2, 5, 500, 10, 10, Pi0::none, 0.052},
    {TableId::tab5, TestId::test2, 2, 5, 500, 10, 10, Pi0::none, 0.053},
    {TableId::tab5, TestId::test3, 2, 5, 500, 10, 10, Pi0::none, 0.052},
    {TableId::tab5, TestId::test1, 2, 5, 50, 20, 30, Pi0::none, 0.059},
    {TableId::tab5, TestId::test2, 2, 5, 50, 20, 30, Pi0::none, 0.06},
    {TableId::tab5, TestId::test3, 2, 5, 50, 20, 30, Pi0::none, 0.058},
    {TableId::tab5, TestId::test1, 2, 5, 500, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test2, 2, 5, 500, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 500, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test1, 2, 5, 50, 30, 30, Pi0::none, 0.055},
    {TableId::tab5, TestId::test2, 2, 5, 50, 30, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 50, 30, 30, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 500, 30, 30, Pi0::none, 0.048},
    {TableId::tab5, TestId::test2, 2, 5, 500, 30, 30, Pi0::none, 0.048},
    {TableId::tab5, TestId::test3, 2, 5, 500, 30, 30, Pi0::none, 0.048},
    {TableId::tab5, TestId::test1, 2, 5, 100, 5, 10, Pi0::none, 0.053},
    {TableId::tab5, TestId::test2, 2, 5, 100, 5, 10, Pi0::none, 0.055},
    {TableId::tab5, TestId::test3, 2, 5, 100, 5, 10, Pi0::none, 0.051},
    {TableId::tab5, TestId::test1, 2, 5, 750, 5, 10, Pi0::none, 0.051},
    {TableId::tab5, TestId::test2, 2, 5, 750, 5, 10, Pi0::none, 0.052},
    {TableId::tab5, TestId::test3, 2, 5, 750, 5, 10, Pi0::none, 0.054},
    {TableId::tab5, TestId::test1, 2, 5, 100, 10, 10, Pi0::none, 0.056},
    {TableId::tab5, TestId::test2, 2, 5, 100, 10, 10, Pi0::none, 0.058},
    {TableId::tab5, TestId::test3, 2, 5, 100, 10, 10, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 750, 10, 10, Pi0::none, 0.055},
    {TableId::tab5, TestId::test2, 2, 5, 750, 10, 10, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 750, 10, 10, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 100, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test2, 2, 5, 100, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 100, 20, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test1, 2, 5, 750, 20, 30, Pi0::none, 0.053},
    {TableId::tab5, TestId::test2, 2, 5, 750, 20, 30, Pi0::none, 0.053},
    {TableId::tab5, TestId::test3, 2, 5, 750, 20, 30, Pi0::none, 0.053},
    {TableId::tab5, TestId::test1, 2, 5, 100, 30, 30, Pi0::none, 0.053},
    {TableId::tab5, TestId::test2, 2, 5, 100, 30, 30, Pi0::none, 0.056},
    {TableId::tab5, TestId::test3, 2, 5, 100, 30, 30, Pi0::none, 0.055},
    {TableId::tab5, TestId::test1, 2, 5, 750, 30, 30, Pi0::none, 0.05},
    {TableId::tab5, TestId::test2, 2, 5, 750, 30, 30, Pi0::none, 0.049},
    {TableId::tab5, TestId::test3, 2, 5, 750, 30, 30, Pi0::none, 0.05},
    {TableId::tab6, TestId::test1, 2, 10, 20, 5, 10, Pi0::none, 0.062},
    {TableId::tab6, TestId::test2, 2, 10, 20, 5, 10, Pi0::none, 0.069},
    {TableId::tab6, TestId::test3, 2, 10, 20, 5, 10, Pi0::none, 0.062},
    {TableId::tab6, TestId::test1, 2, 10, 200, 5, 10, Pi0::none, 0.054},
    {TableId::tab6, TestId::test2, 2, 10, 200, 5, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test3, 2, 10, 200, 5, 10, Pi0::none, 0.053},
    {TableId::tab6, TestId::test1, 2, 10, 20, 10, 10, Pi0::none, 0.062},
    {TableId::tab6, TestId::test2, 2, 10, 20, 10, 10, Pi0::none, 0.066},
    {TableId::tab6, TestId::test3, 2, 10, 20, 10, 10, Pi0::none, 0.059},
    {TableId::tab6, TestId::test1, 2, 10, 200, 10, 10, Pi0::none, 0.05},
    {TableId::tab6, TestId::test2, 2, 10, 200, 10, 10, Pi0::none, 0.052},
    {TableId::tab6, TestId::test3, 2, 10, 200, 10, 10, Pi0::none, 0.05},
    {TableId::tab6, TestId::test1, 2, 10, 20, 20, 30, Pi0::none, 0.059},
    {TableId::tab6, TestId::test2, 2, 10, 20, 20, 30, Pi0::none, 0.06},
    {TableId::tab6, TestId::test3, 2, 10, 20, 20, 30, Pi0::none, 0.058},
    {TableId::tab6, TestId::test1, 2, 10, 200, 20, 30, Pi0::none, 0.051},
    {TableId::tab6, TestId::test2, 2, 10, 200, 20, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test3, 2, 10, 200, 20, 30, Pi0::none, 0.051},
    {TableId::tab6, TestId::test1, 2, 10, 20, 30, 30, Pi0::none, 0.064},
    {TableId::tab6, TestId::test2, 2, 10, 20, 30, 30, Pi0::none, 0.065},
    {TableId::tab6, TestId::test3, 2, 10, 20, 30, 30, Pi0::none, 0.062},
    {TableId::tab6, TestId::test1, 2, 10, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test2, 2, 10, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test3, 2, 10, 200, 30, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test1, 2, 10, 50, 5, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test2, 2, 10, 50, 5, 10, Pi0::none, 0.06},
    {TableId::tab6, TestId::test3, 2, 10, 50, 5, 10, Pi0::none, 0.053},
    {TableId::tab6, TestId::test1, 2, 10, 500, 5, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test2, 2, 10, 500, 5, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test3, 2, 10, 500, 5, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test1, 2, 10, 50, 10, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test2, 2, 10, 50, 10, 10, Pi0::none, 0.058},
    {TableId::tab6, TestId::test3, 2, 10, 50, 10, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test1, 2, 10, 500, 10, 10, Pi0::none, 0.05},
    {TableId::tab6, TestId::test2, 2, 10, 500, 10, 10, Pi0::none, 0.051},
    {TableId::tab6, TestId::test3, 2, 10, 500, 10, 10, Pi0::none, 0.05},
    {TableId::tab6, TestId::test1, 2, 10, 50, 20, 30, Pi0::none, 0.058},
    {TableId::tab6, TestId::test2, 2, 10, 50, 20, 30, Pi0::none, 0.059},
    {TableId::tab6, TestId::test3, 2, 10, 50, 20, 30, Pi0::none, 0.057},
    {TableId::tab6, TestId::test1, 2, 10, 500, 20, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test2, 2, 10, 500, 20, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test3, 2, 10, 500, 20, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test1, 2, 10, 50, 30, 30, Pi0::none, 0.056},
    {TableId::tab6, TestId::test2, 2, 10, 50, 30, 30, Pi0::none, 0.057},
    {TableId::tab6, TestId::test3, 2, 10, 50, 30, 30, Pi0::none, 0.056},
    {TableId::tab6, TestId::test1, 2, 10, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test2, 2, 10, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test3, 2, 10, 500, 30, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test1, 2, 10, 100, 5, 10, Pi0::none, 0.052},
    {TableId::tab6, TestId::test2, 2, 10, 100, 5, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test3, 2, 10, 100, 5, 10, Pi0::none, 0.051},
    {TableId::tab6, TestId::test1, 2, 10, 750, 5, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test2, 2, 10, 750, 5, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test3, 2, 10, 750, 5, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test1, 2, 10, 100, 10, 10, Pi0::none, 0.055},
    {TableId::tab6, TestId::test2, 2, 10, 100, 10, 10, Pi0::none, 0.056},
    {TableId::tab6, TestId::test3, 2, 10, 100, 10, 10, Pi0::none, 0.054},
    {TableId::tab6, TestId::test1, 2, 10, 750, 10, 10, Pi0::none, 0.053},
    {TableId::tab6, TestId::test2, 2, 10, 750, 10, 10, Pi0::none, 0.054},
    {TableId::tab6, TestId::test3, 2, 10, 750, 10, 10, Pi0::none, 0.053},
    {TableId::tab6, TestId::test1, 2, 10, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test2, 2, 10, 100, 20, 30, Pi0::none, 0.053},
    {TableId::tab6, TestId::test3, 2, 10, 100, 20, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test1, 2, 10, 750, 20, 30, Pi0::none, 0.051},
    {TableId::tab6, TestId::test2, 2, 10, 750, 20, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test3, 2, 10, 750, 20, 30, Pi0::none, 0.052},
    {TableId::tab6, TestId::test1, 2, 10, 100, 30, 30, Pi0::none, 0.054},
    {TableId::tab6, TestId::test2, 2, 10, 100, 30, 30, Pi0::none, 0.055},
    {TableId::tab6, TestId::test3, 2, 10, 100, 30, 30, Pi0::none, 0.054},
    {TableId::tab6, TestId::test1, 2, 10, 750, 30, 30, Pi0::none, 0.054},
    {TableId::tab6, TestId::test2, 2, 10, 750, 30, 30, Pi0::none, 0.054},
    {TableId::tab6, TestId::test3, 2, 10, 750, 30, 30, Pi0::none, 0.054},
    {TableId::rev1, TestId::test4, 1, 5, 20, 5, 10, Pi0::none, 0.065},
    {TableId::rev1, TestId::test5, 1, 5, 20, 5, 10, Pi0::none, 0.091},
    {TableId::rev1, TestId::test6, 1, 5, 20, 5, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test7, 1, 5, 20, 5, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test4, 1, 5, 200, 5, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test5, 1, 5, 200, 5, 10, Pi0::none, 0.086},
    {TableId::rev1, TestId::test6, 1, 5, 200, 5, 10, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 200, 5, 10, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 20, 10, 10, Pi0::none, 0.064},
    {TableId::rev1, TestId::test5, 1, 5, 20, 10, 10, Pi0::none, 0.081},
    {TableId::rev1, TestId::test6, 1, 5, 20, 10, 10, Pi0::none, 0.056},
    {TableId::rev1, TestId::test7, 1, 5, 20, 10, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test4, 1, 5, 200, 10, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test5, 1, 5, 200, 10, 10, Pi0::none, 0.077},
    {TableId::rev1, TestId::test6, 1, 5, 200, 10, 10, Pi0::none, 0.049},
    {TableId::rev1, TestId::test7, 1, 5, 200, 10, 10, Pi0::none, 0.049},
    {TableId::rev1, TestId::test4, 1, 5, 20, 20, 30, Pi0::none, 0.062},
    {TableId::rev1, TestId::test5, 1, 5, 20, 20, 30, Pi0::none, 0.068},
    {TableId::rev1, TestId::test6, 1, 5, 20, 20, 30, Pi0::none, 0.056},
    {TableId::rev1, TestId::test7, 1, 5, 20, 20, 30, Pi0::none, 0.056},
    {TableId::rev1, TestId::test4, 1, 5, 200, 20, 30, Pi0::none, 0.054},
    {TableId::rev1, TestId::test5, 1, 5, 200, 20, 30, Pi0::none, 0.058},
    {TableId::rev1, TestId::test6, 1, 5, 200, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 200, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 20, 30, 30, Pi0::none, 0.059},
    {TableId::rev1, TestId::test5, 1, 5, 20, 30, 30, Pi0::none, 0.067},
    {TableId::rev1, TestId::test6, 1, 5, 20, 30, 30, Pi0::none, 0.057},
    {TableId::rev1, TestId::test7, 1, 5, 20, 30, 30, Pi0::none, 0.057},
    {TableId::rev1, TestId::test4, 1, 5, 200, 30, 30, Pi0::none, 0.053},
    {TableId::rev1, TestId::test5, 1, 5, 200, 30, 30, Pi0::none, 0.058},
    {TableId::rev1, TestId::test6, 1, 5, 200, 30, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test7, 1, 5, 200, 30, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test4, 1, 5, 50, 5, 10, Pi0::none, 0.059},
    {TableId::rev1, TestId::test5, 1, 5, 50, 5, 10, Pi0::none, 0.09},
    {TableId::rev1, TestId::test6, 1, 5, 50, 5, 10, Pi0::none, 0.054},
    {TableId::rev1, TestId::test7, 1, 5, 50, 5, 10, Pi0::none, 0.054},
    {TableId::rev1, TestId::test4, 1, 5, 500, 5, 10, Pi0::none, 0.056},
    {TableId::rev1, TestId::test5, 1, 5, 500, 5, 10, Pi0::none, 0.083},
    {TableId::rev1, TestId::test6, 1, 5, 500, 5, 10, Pi0::none, 0.045},
    {TableId::rev1, TestId::test7, 1, 5, 500, 5, 10, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 50, 10, 10, Pi0::none, 0.058},
    {TableId::rev1, TestId::test5, 1, 5, 50, 10, 10, Pi0::none, 0.075},
    {TableId::rev1, TestId::test6, 1, 5, 50, 10, 10, Pi0::none, 0.048},
    {TableId::rev1, TestId::test7, 1, 5, 50, 10, 10, Pi0::none, 0.048},
    {TableId::rev1, TestId::test4, 1, 5, 500, 10, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test5, 1, 5, 500, 10, 10, Pi0::none, 0.072},
    {TableId::rev1, TestId::test6, 1, 5, 500, 10, 10, Pi0::none, 0.052},
    {TableId::rev1, TestId::test7, 1, 5, 500, 10, 10, Pi0::none, 0.047},
    {TableId::rev1, TestId::test4, 1, 5, 50, 20, 30, Pi0::none, 0.057},
    {TableId::rev1, TestId::test5, 1, 5, 50, 20, 30, Pi0::none, 0.065},
    {TableId::rev1, TestId::test6, 1, 5, 50, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 50, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test5, 1, 5, 500, 20, 30, Pi0::none, 0.058},
    {TableId::rev1, TestId::test6, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test7, 1, 5, 500, 20, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test4, 1, 5, 50, 30, 30, Pi0::none, 0.057},
    {TableId::rev1, TestId::test5, 1, 5, 50, 30, 30, Pi0::none, 0.06},
    {TableId::rev1, TestId::test6, 1, 5, 50, 30, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 50, 30, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 500, 30, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test5, 1, 5, 500, 30, 30, Pi0::none, 0.058},
    {TableId::rev1, TestId::test6, 1, 5, 500, 30, 30, Pi0::none, 0.049},
    {TableId::rev1, TestId::test7, 1, 5, 500, 30, 30, Pi0::none, 0.05},
    {TableId::rev1, TestId::test4, 1, 5, 100, 5, 10, Pi0::none, 0.057},
    {TableId::rev1, TestId::test5, 1, 5, 100, 5, 10, Pi0::none, 0.089},
    {TableId::rev1, TestId::test6, 1, 5, 100, 5, 10, Pi0::none, 0.049},
    {TableId::rev1, TestId::test7, 1, 5, 100, 5, 10, Pi0::none, 0.049},
    {TableId::rev1, TestId::test4, 1, 5, 750, 5, 10, Pi0::none, 0.056},
    {TableId::rev1, TestId::test5, 1, 5, 750, 5, 10, Pi0::none, 0.087},
    {TableId::rev1, TestId::test6, 1, 5, 750, 5, 10, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 750, 5, 10, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 100, 10, 10, Pi0::none, 0.056},
    {TableId::rev1, TestId::test5, 1, 5, 100, 10, 10, Pi0::none, 0.068},
    {TableId::rev1, TestId::test6, 1, 5, 100, 10, 10, Pi0::none, 0.047},
    {TableId::rev1, TestId::test7, 1, 5, 100, 10, 10, Pi0::none, 0.047},
    {TableId::rev1, TestId::test4, 1, 5, 750, 10, 10, Pi0::none, 0.055},
    {TableId::rev1, TestId::test5, 1, 5, 750, 10, 10, Pi0::none, 0.066},
    {TableId::rev1, TestId::test6, 1, 5, 750, 10, 10, Pi0::none, 0.049},
    {TableId::rev1, TestId::test7, 1, 5, 750, 10, 10, Pi0::none, 0.045},
    {TableId::rev1, TestId::test4, 1, 5, 100, 20, 30, Pi0::none, 0.056},
    {TableId::rev1, TestId::test5, 1, 5, 100, 20, 30, Pi0::none, 0.064},
    {TableId::rev1, TestId::test6, 1, 5, 100, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test7, 1, 5, 100, 20, 30, Pi0::none, 0.051},
    {TableId::rev1, TestId::test4, 1, 5, 750, 20, 30, Pi0::none, 0.054},
    {TableId::rev1, TestId::test5, 1, 5, 750, 20, 30, Pi0::none, 0.059},
    {TableId::rev1, TestId::test6, 1, 5, 750, 20, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test7, 1, 5, 750, 20, 30, Pi0::none, 0.049},
    {TableId::rev1, TestId::test4, 1, 5, 100, 30, 30, Pi0::none, 0.055},
    {TableId::rev1, TestId::test5, 1, 5, 100, 30, 30, Pi0::none, 0.064},
    {TableId::rev1, TestId::test6, 1, 5, 100, 30, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test7, 1, 5, 100, 30, 30, Pi0::none, 0.052},
    {TableId::rev1, TestId::test4, 1, 5, 750, 30, 30, Pi0::none, 0.05},
    {TableId::rev1, TestId::test5, 1, 5, 750, 30, 30, Pi0::none, 0.055},
    {TableId::rev1, TestId::test6, 1, 5, 750, 30, 30, Pi0::none, 0.053},
    {TableId::rev1, TestId::test7, 1, 5, 750, 30, 30, Pi0::none, 0.053},
    {TableId::rev2, TestId::test4, 1, 10, 20, 5, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test5, 1, 10, 20, 5, 10, Pi0::none, 0.091},
    {TableId::rev2, TestId::test6, 1, 10, 20, 5, 10, Pi0::none, 0.03},
    {TableId::rev2, TestId::test7, 1, 10, 20, 5, 10, Pi0::none, 0.031},
    {TableId::rev2, TestId::test4, 1, 10, 200, 5, 10, Pi0::none, 0.027},
    {TableId::rev2, TestId::test5, 1, 10, 200, 5, 10, Pi0::none, 0.085},
    {TableId::rev2, TestId::test6, 1, 10, 200, 5, 10, Pi0::none, 0.025},
    {TableId::rev2, TestId::test7, 1, 10, 200, 5, 10, Pi0::none, 0.025},
    {TableId::rev2, TestId::test4, 1, 10, 20, 10, 10, Pi0::none, 0.045},
    {TableId::rev2, TestId::test5, 1, 10, 20, 10, 10, Pi0::none, 0.081},
    {TableId::rev2, TestId::test6, 1, 10, 20, 10, 10, Pi0::none, 0.037},
    {TableId::rev2, TestId::test7, 1, 10, 20, 10, 10, Pi0::none, 0.035},
    {TableId::rev2, TestId::test4, 1, 10, 200, 10, 10, Pi0::none, 0.036},
    {TableId::rev2, TestId::test5, 1, 10, 200, 10, 10, Pi0::none, 0.068},
    {TableId::rev2, TestId::test6, 1, 10, 200, 10, 10, Pi0::none, 0.031},
    {TableId::rev2, TestId::test7, 1, 10, 200, 10, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test4, 1, 10, 20, 20, 30, Pi0::none, 0.048},
    {TableId::rev2, TestId::test5, 1, 10, 20, 20, 30, Pi0::none, 0.064},
    {TableId::rev2, TestId::test6, 1, 10, 20, 20, 30, Pi0::none, 0.044},
    {TableId::rev2, TestId::test7, 1, 10, 20, 20, 30, Pi0::none, 0.045},
    {TableId::rev2, TestId::test4, 1, 10, 200, 20, 30, Pi0::none, 0.043},
    {TableId::rev2, TestId::test5, 1, 10, 200, 20, 30, Pi0::none, 0.065},
    {TableId::rev2, TestId::test6, 1, 10, 200, 20, 30, Pi0::none, 0.045},
    {TableId::rev2, TestId::test7, 1, 10, 200, 20, 30, Pi0::none, 0.045},
    {TableId::rev2, TestId::test4, 1, 10, 20, 30, 30, Pi0::none, 0.051},
    {TableId::rev2, TestId::test5, 1, 10, 20, 30, 30, Pi0::none, 0.063},
    {TableId::rev2, TestId::test6, 1, 10, 20, 30, 30, Pi0::none, 0.048},
    {TableId::rev2, TestId::test7, 1, 10, 20, 30, 30, Pi0::none, 0.05},
    {TableId::rev2, TestId::test4, 1, 10, 200, 30, 30, Pi0::none, 0.051},
    {TableId::rev2, TestId::test5, 1, 10, 200, 30, 30, Pi0::none, 0.059},
    {TableId::rev2, TestId::test6, 1, 10, 200, 30, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test7, 1, 10, 200, 30, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test4, 1, 10, 50, 5, 10, Pi0::none, 0.027},
    {TableId::rev2, TestId::test5, 1, 10, 50, 5, 10, Pi0::none, 0.097},
    {TableId::rev2, TestId::test6, 1, 10, 50, 5, 10, Pi0::none, 0.031},
    {TableId::rev2, TestId::test7, 1, 10, 50, 5, 10, Pi0::none, 0.031},
    {TableId::rev2, TestId::test4, 1, 10, 500, 5, 10, Pi0::none, 0.026},
    {TableId::rev2, TestId::test5, 1, 10, 500, 5, 10, Pi0::none, 0.087},
    {TableId::rev2, TestId::test6, 1, 10, 500, 5, 10, Pi0::none, 0.029},
    {TableId::rev2, TestId::test7, 1, 10, 500, 5, 10, Pi0::none, 0.029},
    {TableId::rev2, TestId::test4, 1, 10, 50, 10, 10, Pi0::none, 0.04},
    {TableId::rev2, TestId::test5, 1, 10, 50, 10, 10, Pi0::none, 0.078},
    {TableId::rev2, TestId::test6, 1, 10, 50, 10, 10, Pi0::none, 0.033},
    {TableId::rev2, TestId::test7, 1, 10, 50, 10, 10, Pi0::none, 0.034},
    {TableId::rev2, TestId::test4, 1, 10, 500, 10, 10, Pi0::none, 0.033},
    {TableId::rev2, TestId::test5, 1, 10, 500, 10, 10, Pi0::none, 0.071},
    {TableId::rev2, TestId::test6, 1, 10, 500, 10, 10, Pi0::none, 0.033},
    {TableId::rev2, TestId::test7, 1, 10, 500, 10, 10, Pi0::none, 0.033},
    {TableId::rev2, TestId::test4, 1, 10, 50, 20, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test5, 1, 10, 50, 20, 30, Pi0::none, 0.067},
    {TableId::rev2, TestId::test6, 1, 10, 50, 20, 30, Pi0::none, 0.047},
    {TableId::rev2, TestId::test7, 1, 10, 50, 20, 30, Pi0::none, 0.044},
    {TableId::rev2, TestId::test4, 1, 10, 500, 20, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test5, 1, 10, 500, 20, 30, Pi0::none, 0.06},
    {TableId::rev2, TestId::test6, 1, 10, 500, 20, 30, Pi0::none, 0.041},
    {TableId::rev2, TestId::test7, 1, 10, 500, 20, 30, Pi0::none, 0.04},
    {TableId::rev2, TestId::test4, 1, 10, 50, 30, 30, Pi0::none, 0.047},
    {TableId::rev2, TestId::test5, 1, 10, 50, 30, 30, Pi0::none, 0.062},
    {TableId::rev2, TestId::test6, 1, 10, 50, 30, 30, Pi0::none, 0.047},
    {TableId::rev2, TestId::test7, 1, 10, 50, 30, 30, Pi0::none, 0.047},
    {TableId::rev2, TestId::test4, 1, 10, 500, 30, 30, Pi0::none, 0.045},
    {TableId::rev2, TestId::test5, 1, 10, 500, 30, 30, Pi0::none, 0.055},
    {TableId::rev2, TestId::test6, 1, 10, 500, 30, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test7, 1, 10, 500, 30, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test4, 1, 10, 100, 5, 10, Pi0::none, 0.029},
    {TableId::rev2, TestId::test5, 1, 10, 100, 5, 10, Pi0::none, 0.09},
    {TableId::rev2, TestId::test6, 1, 10, 100, 5, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test7, 1, 10, 100, 5, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test4, 1, 10, 750, 5, 10, Pi0::none, 0.027},
    {TableId::rev2, TestId::test5, 1, 10, 750, 5, 10, Pi0::none, 0.087},
    {TableId::rev2, TestId::test6, 1, 10, 750, 5, 10, Pi0::none, 0.027},
    {TableId::rev2, TestId::test7, 1, 10, 750, 5, 10, Pi0::none, 0.027},
    {TableId::rev2, TestId::test4, 1, 10, 100, 10, 10, Pi0::none, 0.04},
    {TableId::rev2, TestId::test5, 1, 10, 100, 10, 10, Pi0::none, 0.075},
    {TableId::rev2, TestId::test6, 1, 10, 100, 10, 10, Pi0::none, 0.035},
    {TableId::rev2, TestId::test7, 1, 10, 100, 10, 10, Pi0::none, 0.035},
    {TableId::rev2, TestId::test4, 1, 10, 750, 10, 10, Pi0::none, 0.037},
    {TableId::rev2, TestId::test5, 1, 10, 750, 10, 10, Pi0::none, 0.071},
    {TableId::rev2, TestId::test6, 1, 10, 750, 10, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test7, 1, 10, 750, 10, 10, Pi0::none, 0.032},
    {TableId::rev2, TestId::test4, 1, 10, 100, 20, 30, Pi0::none, 0.046},
    {TableId::rev2, TestId::test5, 1, 10, 100, 20, 30, Pi0::none, 0.064},
    {TableId::rev2, TestId::test6, 1, 10, 100, 20, 30, Pi0::none, 0.042},
    {TableId::rev2, TestId::test7, 1, 10, 100, 20, 30, Pi0::none, 0.042},
    {TableId::rev2, TestId::test4, 1, 10, 750, 20, 30, Pi0::none, 0.042},
    {TableId::rev2, TestId::test5, 1, 10, 750, 20, 30, Pi0::none, 0.06},
    {TableId::rev2, TestId::test6, 1, 10, 750, 20, 30, Pi0::none, 0.041},
    {TableId::rev2, TestId::test7, 1, 10, 750, 20, 30, Pi0::none, 0.041},
    {TableId::rev2, TestId::test4, 1, 10, 100, 30, 30, Pi0::none, 0.047},
    {TableId::rev2, TestId::test5, 1, 10, 100, 30, 30, Pi0::none, 0.062},
    {TableId::rev2, TestId::test6, 1, 10, 100, 30, 30, Pi0::none, 0.044},
    {TableId::rev2, TestId::test7, 1, 10, 100, 30, 30, Pi0::none, 0.044},
    {TableId::rev2, TestId::test4, 1, 10, 750, 30, 30, Pi0::none, 0.043},
    {TableId::rev2, TestId::test5, 1, 10, 750, 30, 30, Pi0::none, 0.053},
    {TableId::rev2, TestId::test6, 1, 10, 750, 30, 30, Pi0::none, 0.048},
    {TableId::rev2, TestId::test7, 1, 10, 750, 30, 30, Pi0::none, 0.049},
    {TableId::rev3, TestId::test4, 1, 20, 20, 5, 10, Pi0::none, 0.01},
    {TableId::rev3, TestId::test5, 1, 20, 20, 5, 10, Pi0::none, 0.097},
    {TableId::rev3, TestId::test6, 1, 20, 20, 5, 10, Pi0::none, 0.011},
    {TableId::rev3, TestId::test7, 1, 20, 20, 5, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test4, 1, 20, 200, 5, 10, Pi0::none, 0.006},
    {TableId::rev3, TestId::test5, 1, 20, 200, 5, 10, Pi0::none, 0.09},
    {TableId::rev3, TestId::test6, 1, 20, 200, 5, 10, Pi0::none, 0.011},
    {TableId::rev3, TestId::test7, 1, 20, 200, 5, 10, Pi0::none, 0.011},
    {TableId::rev3, TestId::test4, 1, 20, 20, 10, 10, Pi0::none, 0.019},
    {TableId::rev3, TestId::test5, 1, 20, 20, 10, 10, Pi0::none, 0.085},
    {TableId::rev3, TestId::test6, 1, 20, 20, 10, 10, Pi0::none, 0.019},
    {TableId::rev3, TestId::test7, 1, 20, 20, 10, 10, Pi0::none, 0.019},
    {TableId::rev3, TestId::test4, 1, 20, 200, 10, 10, Pi0::none, 0.017},
    {TableId::rev3, TestId::test5, 1, 20, 200, 10, 10, Pi0::none, 0.074},
    {TableId::rev3, TestId::test6, 1, 20, 200, 10, 10, Pi0::none, 0.017},
    {TableId::rev3, TestId::test7, 1, 20, 200, 10, 10, Pi0::none, 0.017},
    {TableId::rev3, TestId::test4, 1, 20, 20, 20, 30, Pi0::none, 0.034},
    {TableId::rev3, TestId::test5, 1, 20, 20, 20, 30, Pi0::none, 0.069},
    {TableId::rev3, TestId::test6, 1, 20, 20, 20, 30, Pi0::none, 0.032},
    {TableId::rev3, TestId::test7, 1, 20, 20, 20, 30, Pi0::none, 0.032},
    {TableId::rev3, TestId::test4, 1, 20, 200, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test5, 1, 20, 200, 20, 30, Pi0::none, 0.061},
    {TableId::rev3, TestId::test6, 1, 20, 200, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test7, 1, 20, 200, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test4, 1, 20, 20, 30, 30, Pi0::none, 0.035},
    {TableId::rev3, TestId::test5, 1, 20, 20, 30, 30, Pi0::none, 0.062},
    {TableId::rev3, TestId::test6, 1, 20, 20, 30, 30, Pi0::none, 0.035},
    {TableId::rev3, TestId::test7, 1, 20, 20, 30, 30, Pi0::none, 0.034},
    {TableId::rev3, TestId::test4, 1, 20, 200, 30, 30, Pi0::none, 0.036},
    {TableId::rev3, TestId::test5, 1, 20, 200, 30, 30, Pi0::none, 0.059},
    {TableId::rev3, TestId::test6, 1, 20, 200, 30, 30, Pi0::none, 0.032},
    {TableId::rev3, TestId::test7, 1, 20, 200, 30, 30, Pi0::none, 0.032},
    {TableId::rev3, TestId::test4, 1, 20, 50, 5, 10, Pi0::none, 0.008},
    {TableId::rev3, TestId::test5, 1, 20, 50, 5, 10, Pi0::none, 0.094},
    {TableId::rev3, TestId::test6, 1, 20, 50, 5, 10, Pi0::none, 0.014},
    {TableId::rev3, TestId::test7, 1, 20, 50, 5, 10, Pi0::none, 0.013},
    {TableId::rev3, TestId::test4, 1, 20, 500, 5, 10, Pi0::none, 0.007},
    {TableId::rev3, TestId::test5, 1, 20, 500, 5, 10, Pi0::none, 0.084},
    {TableId::rev3, TestId::test6, 1, 20, 500, 5, 10, Pi0::none, 0.012},
    {TableId::rev3, TestId::test7, 1, 20, 500, 5, 10, Pi0::none, 0.012},
    {TableId::rev3, TestId::test4, 1, 20, 50, 10, 10, Pi0::none, 0.019},
    {TableId::rev3, TestId::test5, 1, 20, 50, 10, 10, Pi0::none, 0.077},
    {TableId::rev3, TestId::test6, 1, 20, 50, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test7, 1, 20, 50, 10, 10, Pi0::none, 0.017},
    {TableId::rev3, TestId::test4, 1, 20, 500, 10, 10, Pi0::none, 0.018},
    {TableId::rev3, TestId::test5, 1, 20, 500, 10, 10, Pi0::none, 0.07},
    {TableId::rev3, TestId::test6, 1, 20, 500, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test7, 1, 20, 500, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test4, 1, 20, 50, 20, 30, Pi0::none, 0.034},
    {TableId::rev3, TestId::test5, 1, 20, 50, 20, 30, Pi0::none, 0.062},
    {TableId::rev3, TestId::test6, 1, 20, 50, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test7, 1, 20, 50, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test4, 1, 20, 500, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test5, 1, 20, 500, 20, 30, Pi0::none, 0.058},
    {TableId::rev3, TestId::test6, 1, 20, 500, 20, 30, Pi0::none, 0.03},
    {TableId::rev3, TestId::test7, 1, 20, 500, 20, 30, Pi0::none, 0.03},
    {TableId::rev3, TestId::test4, 1, 20, 50, 30, 30, Pi0::none, 0.036},
    {TableId::rev3, TestId::test5, 1, 20, 50, 30, 30, Pi0::none, 0.058},
    {TableId::rev3, TestId::test6, 1, 20, 50, 30, 30, Pi0::none, 0.035},
    {TableId::rev3, TestId::test7, 1, 20, 50, 30, 30, Pi0::none, 0.035},
    {TableId::rev3, TestId::test4, 1, 20, 500, 30, 30, Pi0::none, 0.033},
    {TableId::rev3, TestId::test5, 1, 20, 500, 30, 30, Pi0::none, 0.058},
    {TableId::rev3, TestId::test6, 1, 20, 500, 30, 30, Pi0::none, 0.034},
    {TableId::rev3, TestId::test7, 1, 20, 500, 30, 30, Pi0::none, 0.034},
    {TableId::rev3, TestId::test4, 1, 20, 100, 5, 10, Pi0::none, 0.007},
    {TableId::rev3, TestId::test5, 1, 20, 100, 5, 10, Pi0::none, 0.089},
    {TableId::rev3, TestId::test6, 1, 20, 100, 5, 10, Pi0::none, 0.009},
    {TableId::rev3, TestId::test7, 1, 20, 100, 5, 10, Pi0::none, 0.01},
    {TableId::rev3, TestId::test4, 1, 20, 750, 5, 10, Pi0::none, 0.008},
    {TableId::rev3, TestId::test5, 1, 20, 750, 5, 10, Pi0::none, 0.082},
    {TableId::rev3, TestId::test6, 1, 20, 750, 5, 10, Pi0::none, 0.013},
    {TableId::rev3, TestId::test7, 1, 20, 750, 5, 10, Pi0::none, 0.013},
    {TableId::rev3, TestId::test4, 1, 20, 100, 10, 10, Pi0::none, 0.019},
    {TableId::rev3, TestId::test5, 1, 20, 100, 10, 10, Pi0::none, 0.072},
    {TableId::rev3, TestId::test6, 1, 20, 100, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test7, 1, 20, 100, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test4, 1, 20, 750, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test5, 1, 20, 750, 10, 10, Pi0::none, 0.07},
    {TableId::rev3, TestId::test6, 1, 20, 750, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test7, 1, 20, 750, 10, 10, Pi0::none, 0.016},
    {TableId::rev3, TestId::test4, 1, 20, 100, 20, 30, Pi0::none, 0.03},
    {TableId::rev3, TestId::test5, 1, 20, 100, 20, 30, Pi0::none, 0.061},
    {TableId::rev3, TestId::test6, 1, 20, 100, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test7, 1, 20, 100, 20, 30, Pi0::none, 0.031},
    {TableId::rev3, TestId::test4, 1, 20, 750, 20, 30, Pi0::none, 0.029},
    {TableId::rev3, TestId::test5, 1, 20, 750, 20, 30, Pi0::none, 0.062},
    {TableId::rev3, TestId::test6, 1, 20, 750, 20, 30, Pi0::none, 0.03},
    {TableId::rev3, TestId::test7, 1, 20, 750, 20, 30, Pi0::none, 0.03},
    {TableId::rev3, TestId::test4, 1, 20, 100, 30, 30, Pi0::none, 0.04},
    {TableId::rev3, TestId::test5, 1, 20, 100, 30, 30, Pi0::none, 0.058},
    {TableId::rev3, TestId::test6, 1, 20, 100, 30, 30, Pi0::none, 0.033},
    {TableId::rev3, TestId::test7, 1, 20, 100, 30, 30, Pi0::none, 0.033},
    {TableId::rev3, TestId::test4, 1, 20, 750, 30, 30, Pi0::none, 0.038},
    {TableId::rev3, TestId::test5, 1, 20, 750, 30, 30, Pi0::none, 0.059},
    {TableId::rev3, TestId::test6, 1, 20, 750, 30, 30, Pi0::none, 0.036},
    {TableId::rev3, TestId::test7, 1, 20, 750, 30, 30, Pi0::none, 0.036},
    {TableId::power1, TestId::test1, 3, 5, 20, 5, 5, Pi0::pi2, 0.077},
    {TableId::power1, TestId::test2, 3, 5, 20, 5, 5, Pi0::pi2, 0.082},
    {TableId::power1, TestId::test3, 3, 5, 20, 5, 5, Pi0::pi2, 0.074},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 5, 5, Pi0::pi2, 0.061},
    {TableId::power1, TestId::test1, 3, 5, 20, 5, 5, Pi0::pi4, 0.12},
    {TableId::power1, TestId::test2, 3, 5, 20, 5, 5, Pi0::pi4, 0.13},
    {TableId::power1, TestId::test3, 3, 5, 20, 5, 5, Pi0::pi4, 0.112},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 5, 5, Pi0::pi4, 0.12},
    {TableId::power1, TestId::test1, 3, 5, 20, 5, 10, Pi0::pi2, 0.079},
    {TableId::power1, TestId::test2, 3, 5, 20, 5, 10, Pi0::pi2, 0.087},
    {TableId::power1, TestId::test3, 3, 5, 20, 5, 10, Pi0::pi2, 0.074},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 5, 10, Pi0::pi2, 0.073},
    {TableId::power1, TestId::test1, 3, 5, 20, 5, 10, Pi0::pi4, 0.138},
    {TableId::power1, TestId::test2, 3, 5, 20, 5, 10, Pi0::pi4, 0.147},
    {TableId::power1, TestId::test3, 3, 5, 20, 5, 10, Pi0::pi4, 0.133},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 5, 10, Pi0::pi4, 0.171},
    {TableId::power1, TestId::test1, 3, 5, 20, 10, 10, Pi0::pi2, 0.086},
    {TableId::power1, TestId::test2, 3, 5, 20, 10, 10, Pi0::pi2, 0.091},
    {TableId::power1, TestId::test3, 3, 5, 20, 10, 10, Pi0::pi2, 0.083},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 10, 10, Pi0::pi2, 0.086},
    {TableId::power1, TestId::test1, 3, 5, 20, 10, 10, Pi0::pi4, 0.192},
    {TableId::power1, TestId::test2, 3, 5, 20, 10, 10, Pi0::pi4, 0.199},
    {TableId::power1, TestId::test3, 3, 5, 20, 10, 10, Pi0::pi4, 0.185},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 10, 10, Pi0::pi4, 0.214},
    {TableId::power1, TestId::test1, 3, 5, 20, 20, 30, Pi0::pi2, 0.105},
    {TableId::power1, TestId::test2, 3, 5, 20, 20, 30, Pi0::pi2, 0.107},
    {TableId::power1, TestId::test3, 3, 5, 20, 20, 30, Pi0::pi2, 0.102},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 20, 30, Pi0::pi2, 0.121},
    {TableId::power1, TestId::test1, 3, 5, 20, 20, 30, Pi0::pi4, 0.289},
    {TableId::power1, TestId::test2, 3, 5, 20, 20, 30, Pi0::pi4, 0.295},
    {TableId::power1, TestId::test3, 3, 5, 20, 20, 30, Pi0::pi4, 0.282},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 20, 30, Pi0::pi4, 0.325},
    {TableId::power1, TestId::test1, 3, 5, 20, 30, 30, Pi0::pi2, 0.166},
    {TableId::power1, TestId::test2, 3, 5, 20, 30, 30, Pi0::pi2, 0.169},
    {TableId::power1, TestId::test3, 3, 5, 20, 30, 30, Pi0::pi2, 0.164},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 30, 30, Pi0::pi2, 0.176},
    {TableId::power1, TestId::test1, 3, 5, 20, 30, 30, Pi0::pi4, 0.518},
    {TableId::power1, TestId::test2, 3, 5, 20, 30, 30, Pi0::pi4, 0.585},
    {TableId::power1, TestId::test3, 3, 5, 20, 30, 30, Pi0::pi4, 0.58},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 20, 30, 30, Pi0::pi4, 0.5},
    {TableId::power1, TestId::test1, 3, 5, 50, 5, 5, Pi0::pi2, 0.08},
    {TableId::power1, TestId::test2, 3, 5, 50, 5, 5, Pi0::pi2, 0.085},
    {TableId::power1, TestId::test3, 3, 5, 50, 5, 5, Pi0::pi2, 0.076},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 5, 5, Pi0::pi2, 0.094},
    {TableId::power1, TestId::test1, 3, 5, 50, 5, 5, Pi0::pi4, 0.15},
    {TableId::power1, TestId::test2, 3, 5, 50, 5, 5, Pi0::pi4, 0.159},
    {TableId::power1, TestId::test3, 3, 5, 50, 5, 5, Pi0::pi4, 0.145},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 5, 5, Pi0::pi4, 0.355},
    {TableId::power1, TestId::test1, 3, 5, 50, 5, 10, Pi0::pi2, 0.084},
    {TableId::power1, TestId::test2, 3, 5, 50, 5, 10, Pi0::pi2, 0.089},
    {TableId::power1, TestId::test3, 3, 5, 50, 5, 10, Pi0::pi2, 0.081},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 5, 10, Pi0::pi2, 0.11},
    {TableId::power1, TestId::test1, 3, 5, 50, 5, 10, Pi0::pi4, 0.193},
    {TableId::power1, TestId::test2, 3, 5, 50, 5, 10, Pi0::pi4, 0.199},
    {TableId::power1, TestId::test3, 3, 5, 50, 5, 10, Pi0::pi4, 0.186},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 5, 10, Pi0::pi4, 0.325},
    {TableId::power1, TestId::test1, 3, 5, 50, 10, 10, Pi0::pi2, 0.097},
    {TableId::power1, TestId::test2, 3, 5, 50, 10, 10, Pi0::pi2, 0.1},
    {TableId::power1, TestId::test3, 3, 5, 50, 10, 10, Pi0::pi2, 0.096},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 10, 10, Pi0::pi2, 0.145},
    {TableId::power1, TestId::test1, 3, 5, 50, 10, 10, Pi0::pi4, 0.302},
    {TableId::power1, TestId::test2, 3, 5, 50, 10, 10, Pi0::pi4, 0.309},
    {TableId::power1, TestId::test3, 3, 5, 50, 10, 10, Pi0::pi4, 0.298},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 10, 10, Pi0::pi4, 0.445},
    {TableId::power1, TestId::test1, 3, 5, 50, 20, 30, Pi0::pi2, 0.132},
    {TableId::power1, TestId::test2, 3, 5, 50, 20, 30, Pi0::pi2, 0.135},
    {TableId::power1, TestId::test3, 3, 5, 50, 20, 30, Pi0::pi2, 0.13},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 20, 30, Pi0::pi2, 0.209},
    {TableId::power1, TestId::test1, 3, 5, 50, 20, 30, Pi0::pi4, 0.47},
    {TableId::power1, TestId::test2, 3, 5, 50, 20, 30, Pi0::pi4, 0.475},
    {TableId::power1, TestId::test3, 3, 5, 50, 20, 30, Pi0::pi4, 0.465},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 20, 30, Pi0::pi4, 0.613},
    {TableId::power1, TestId::test1, 3, 5, 50, 30, 30, Pi0::pi2, 0.242},
    {TableId::power1, TestId::test2, 3, 5, 50, 30, 30, Pi0::pi2, 0.243},
    {TableId::power1, TestId::test3, 3, 5, 50, 30, 30, Pi0::pi2, 0.24},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 30, 30, Pi0::pi2, 0.377},
    {TableId::power1, TestId::test1, 3, 5, 50, 30, 30, Pi0::pi4, 0.856},
    {TableId::power1, TestId::test2, 3, 5, 50, 30, 30, Pi0::pi4, 0.859},
    {TableId::power1, TestId::test3, 3, 5, 50, 30, 30, Pi0::pi4, 0.856},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 50, 30, 30, Pi0::pi4, 0.84},
    {TableId::power1, TestId::test1, 3, 5, 200, 5, 5, Pi0::pi2, 0.093},
    {TableId::power1, TestId::test2, 3, 5, 200, 5, 5, Pi0::pi2, 0.095},
    {TableId::power1, TestId::test3, 3, 5, 200, 5, 5, Pi0::pi2, 0.09},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 5, 5, Pi0::pi2, 0.242},
    {TableId::power1, TestId::test1, 3, 5, 200, 5, 5, Pi0::pi4, 0.279},
    {TableId::power1, TestId::test2, 3, 5, 200, 5, 5, Pi0::pi4, 0.286},
    {TableId::power1, TestId::test3, 3, 5, 200, 5, 5, Pi0::pi4, 0.276},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 5, 5, Pi0::pi4, 0.754},
    {TableId::power1, TestId::test1, 3, 5, 200, 5, 10, Pi0::pi2, 0.111},
    {TableId::power1, TestId::test2, 3, 5, 200, 5, 10, Pi0::pi2, 0.115},
    {TableId::power1, TestId::test3, 3, 5, 200, 5, 10, Pi0::pi2, 0.109},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 5, 10, Pi0::pi2, 0.336},
    {TableId::power1, TestId::test1, 3, 5, 200, 5, 10, Pi0::pi4, 0.4},
    {TableId::power1, TestId::test2, 3, 5, 200, 5, 10, Pi0::pi4, 0.407},
    {TableId::power1, TestId::test3, 3, 5, 200, 5, 10, Pi0::pi4, 0.394},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 5, 10, Pi0::pi4, 0.869},
    {TableId::power1, TestId::test1, 3, 5, 200, 10, 10, Pi0::pi2, 0.153},
    {TableId::power1, TestId::test2, 3, 5, 200, 10, 10, Pi0::pi2, 0.155},
    {TableId::power1, TestId::test3, 3, 5, 200, 10, 10, Pi0::pi2, 0.152},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 10, 10, Pi0::pi2, 0.482},
    {TableId::power1, TestId::test1, 3, 5, 200, 10, 10, Pi0::pi4, 0.657},
    {TableId::power1, TestId::test2, 3, 5, 200, 10, 10, Pi0::pi4, 0.661},
    {TableId::power1, TestId::test3, 3, 5, 200, 10, 10, Pi0::pi4, 0.656},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 10, 10, Pi0::pi4, 0.96},
    {TableId::power1, TestId::test1, 3, 5, 200, 20, 30, Pi0::pi2, 0.234},
    {TableId::power1, TestId::test2, 3, 5, 200, 20, 30, Pi0::pi2, 0.237},
    {TableId::power1, TestId::test3, 3, 5, 200, 20, 30, Pi0::pi2, 0.233},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 20, 30, Pi0::pi2, 0.672},
    {TableId::power1, TestId::test1, 3, 5, 200, 20, 30, Pi0::pi4, 0.903},
    {TableId::power1, TestId::test2, 3, 5, 200, 20, 30, Pi0::pi4, 0.904},
    {TableId::power1, TestId::test3, 3, 5, 200, 20, 30, Pi0::pi4, 0.902},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 20, 30, Pi0::pi4, 0.992},
    {TableId::power1, TestId::test1, 3, 5, 200, 30, 30, Pi0::pi2, 0.551},
    {TableId::power1, TestId::test2, 3, 5, 200, 30, 30, Pi0::pi2, 0.552},
    {TableId::power1, TestId::test3, 3, 5, 200, 30, 30, Pi0::pi2, 0.55},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 30, 30, Pi0::pi2, 0.926},
    {TableId::power1, TestId::test1, 3, 5, 200, 30, 30, Pi0::pi4, 0.999},
    {TableId::power1, TestId::test2, 3, 5, 200, 30, 30, Pi0::pi4, 0.999},
    {TableId::power1, TestId::test3, 3, 5, 200, 30, 30, Pi0::pi4, 0.999},
    {TableId::power1, TestId::chisq_pooled, 3, 5, 200, 30, 30, Pi0::pi4, 0.999},
    {TableId::power1, TestId::test1, 3, 10, 20, 5, 5, Pi0::pi2, 0.076},
    {TableId::power1, TestId::test2, 3, 10, 20, 5, 5, Pi0::pi2, 0.089},
    {TableId::power1, TestId::test3, 3, 10, 20, 5, 5, Pi0::pi2, 0.073},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 5, 5, Pi0::pi2, 0.062},
    {TableId::power1, TestId::test1, 3, 10, 20, 5, 5, Pi0::pi4, 0.125},
    {TableId::power1, TestId::test2, 3, 10, 20, 5, 5, Pi0::pi4, 0.145},
    {TableId::power1, TestId::test3, 3, 10, 20, 5, 5, Pi0::pi4, 0.121},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 5, 5, Pi0::pi4, 0.137},
    {TableId::power1, TestId::test1, 3, 10, 20, 5, 10, Pi0::pi2, 0.08},
    {TableId::power1, TestId::test2, 3, 10, 20, 5, 10, Pi0::pi2, 0.089},
    {TableId::power1, TestId::test3, 3, 10, 20, 5, 10, Pi0::pi2, 0.077},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 5, 10, Pi0::pi2, 0.094},
    {TableId::power1, TestId::test1, 3, 10, 20, 5, 10, Pi0::pi4, 0.158},
    {TableId::power1, TestId::test2, 3, 10, 20, 5, 10, Pi0::pi4, 0.171},
    {TableId::power1, TestId::test3, 3, 10, 20, 5, 10, Pi0::pi4, 0.15},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 5, 10, Pi0::pi4, 0.209},
    {TableId::power1, TestId::test1, 3, 10, 20, 10, 10, Pi0::pi2, 0.088},
    {TableId::power1, TestId::test2, 3, 10, 20, 10, 10, Pi0::pi2, 0.094},
    {TableId::power1, TestId::test3, 3, 10, 20, 10, 10, Pi0::pi2, 0.086},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 10, 10, Pi0::pi2, 0.101},
    {TableId::power1, TestId::test1, 3, 10, 20, 10, 10, Pi0::pi4, 0.233},
    {TableId::power1, TestId::test2, 3, 10, 20, 10, 10, Pi0::pi4, 0.246},
    {TableId::power1, TestId::test3, 3, 10, 20, 10, 10, Pi0::pi4, 0.23},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 10, 10, Pi0::pi4, 0.268},
    {TableId::power1, TestId::test1, 3, 10, 20, 20, 30, Pi0::pi2, 0.103},
    {TableId::power1, TestId::test2, 3, 10, 20, 20, 30, Pi0::pi2, 0.111},
    {TableId::power1, TestId::test3, 3, 10, 20, 20, 30, Pi0::pi2, 0.103},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 20, 30, Pi0::pi2, 0.172},
    {TableId::power1, TestId::test1, 3, 10, 20, 20, 30, Pi0::pi4, 0.367},
    {TableId::power1, TestId::test2, 3, 10, 20, 20, 30, Pi0::pi4, 0.374},
    {TableId::power1, TestId::test3, 3, 10, 20, 20, 30, Pi0::pi4, 0.355},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 20, 30, Pi0::pi4, 0.438},
    {TableId::power1, TestId::test1, 3, 10, 20, 30, 30, Pi0::pi2, 0.186},
    {TableId::power1, TestId::test2, 3, 10, 20, 30, 30, Pi0::pi2, 0.19},
    {TableId::power1, TestId::test3, 3, 10, 20, 30, 30, Pi0::pi2, 0.185},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 30, 30, Pi0::pi2, 0.276},
    {TableId::power1, TestId::test1, 3, 10, 20, 30, 30, Pi0::pi4, 0.704},
    {TableId::power1, TestId::test2, 3, 10, 20, 30, 30, Pi0::pi4, 0.708},
    {TableId::power1, TestId::test3, 3, 10, 20, 30, 30, Pi0::pi4, 0.703},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 20, 30, 30, Pi0::pi4, 0.621},
    {TableId::power1, TestId::test1, 3, 10, 50, 5, 5, Pi0::pi2, 0.077},
    {TableId::power1, TestId::test2, 3, 10, 50, 5, 5, Pi0::pi2, 0.087},
    {TableId::power1, TestId::test3, 3, 10, 50, 5, 5, Pi0::pi2, 0.075},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 5, 5, Pi0::pi2, 0.112},
    {TableId::power1, TestId::test1, 3, 10, 50, 5, 5, Pi0::pi4, 0.162},
    {TableId::power1, TestId::test2, 3, 10, 50, 5, 5, Pi0::pi4, 0.177},
    {TableId::power1, TestId::test3, 3, 10, 50, 5, 5, Pi0::pi4, 0.16},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 5, 5, Pi0::pi4, 0.302},
    {TableId::power1, TestId::test1, 3, 10, 50, 5, 10, Pi0::pi2, 0.083},
    {TableId::power1, TestId::test2, 3, 10, 50, 5, 10, Pi0::pi2, 0.091},
    {TableId::power1, TestId::test3, 3, 10, 50, 5, 10, Pi0::pi2, 0.082},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 5, 10, Pi0::pi2, 0.158},
    {TableId::power1, TestId::test1, 3, 10, 50, 5, 10, Pi0::pi4, 0.228},
    {TableId::power1, TestId::test2, 3, 10, 50, 5, 10, Pi0::pi4, 0.241},
    {TableId::power1, TestId::test3, 3, 10, 50, 5, 10, Pi0::pi4, 0.221},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 5, 10, Pi0::pi4, 0.438},
    {TableId::power1, TestId::test1, 3, 10, 50, 10, 10, Pi0::pi2, 0.108},
    {TableId::power1, TestId::test2, 3, 10, 50, 10, 10, Pi0::pi2, 0.113},
    {TableId::power1, TestId::test3, 3, 10, 50, 10, 10, Pi0::pi2, 0.107},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 10, 10, Pi0::pi2, 0.195},
    {TableId::power1, TestId::test1, 3, 10, 50, 10, 10, Pi0::pi4, 0.382},
    {TableId::power1, TestId::test2, 3, 10, 50, 10, 10, Pi0::pi4, 0.394},
    {TableId::power1, TestId::test3, 3, 10, 50, 10, 10, Pi0::pi4, 0.38},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 10, 10, Pi0::pi4, 0.583},
    {TableId::power1, TestId::test1, 3, 10, 50, 20, 30, Pi0::pi2, 0.141},
    {TableId::power1, TestId::test2, 3, 10, 50, 20, 30, Pi0::pi2, 0.145},
    {TableId::power1, TestId::test3, 3, 10, 50, 20, 30, Pi0::pi2, 0.138},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 20, 30, Pi0::pi2, 0.347},
    {TableId::power1, TestId::test1, 3, 10, 50, 20, 30, Pi0::pi4, 0.606},
    {TableId::power1, TestId::test2, 3, 10, 50, 20, 30, Pi0::pi4, 0.609},
    {TableId::power1, TestId::test3, 3, 10, 50, 20, 30, Pi0::pi4, 0.594},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 20, 30, Pi0::pi4, 0.757},
    {TableId::power1, TestId::test1, 3, 10, 50, 30, 30, Pi0::pi2, 0.298},
    {TableId::power1, TestId::test2, 3, 10, 50, 30, 30, Pi0::pi2, 0.302},
    {TableId::power1, TestId::test3, 3, 10, 50, 30, 30, Pi0::pi2, 0.296},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 30, 30, Pi0::pi2, 0.564},
    {TableId::power1, TestId::test1, 3, 10, 50, 30, 30, Pi0::pi4, 0.936},
    {TableId::power1, TestId::test2, 3, 10, 50, 30, 30, Pi0::pi4, 0.937},
    {TableId::power1, TestId::test3, 3, 10, 50, 30, 30, Pi0::pi4, 0.937},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 50, 30, 30, Pi0::pi4, 0.921},
    {TableId::power1, TestId::test1, 3, 10, 200, 5, 5, Pi0::pi2, 0.102},
    {TableId::power1, TestId::test2, 3, 10, 200, 5, 5, Pi0::pi2, 0.109},
    {TableId::power1, TestId::test3, 3, 10, 200, 5, 5, Pi0::pi2, 0.101},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 5, 5, Pi0::pi2, 0.386},
    {TableId::power1, TestId::test1, 3, 10, 200, 5, 5, Pi0::pi4, 0.372},
    {TableId::power1, TestId::test2, 3, 10, 200, 5, 5, Pi0::pi4, 0.385},
    {TableId::power1, TestId::test3, 3, 10, 200, 5, 5, Pi0::pi4, 0.372},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 5, 5, Pi0::pi4, 0.909},
    {TableId::power1, TestId::test1, 3, 10, 200, 5, 10, Pi0::pi2, 0.123},
    {TableId::power1, TestId::test2, 3, 10, 200, 5, 10, Pi0::pi2, 0.127},
    {TableId::power1, TestId::test3, 3, 10, 200, 5, 10, Pi0::pi2, 0.121},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 5, 10, Pi0::pi2, 0.544},
    {TableId::power1, TestId::test1, 3, 10, 200, 5, 10, Pi0::pi4, 0.528},
    {TableId::power1, TestId::test2, 3, 10, 200, 5, 10, Pi0::pi4, 0.534},
    {TableId::power1, TestId::test3, 3, 10, 200, 5, 10, Pi0::pi4, 0.518},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 5, 10, Pi0::pi4, 0.969},
    {TableId::power1, TestId::test1, 3, 10, 200, 10, 10, Pi0::pi2, 0.175},
    {TableId::power1, TestId::test2, 3, 10, 200, 10, 10, Pi0::pi2, 0.179},
    {TableId::power1, TestId::test3, 3, 10, 200, 10, 10, Pi0::pi2, 0.175},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 10, 10, Pi0::pi2, 0.725},
    {TableId::power1, TestId::test1, 3, 10, 200, 10, 10, Pi0::pi4, 0.815},
    {TableId::power1, TestId::test2, 3, 10, 200, 10, 10, Pi0::pi4, 0.82},
    {TableId::power1, TestId::test3, 3, 10, 200, 10, 10, Pi0::pi4, 0.815},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 10, 10, Pi0::pi4, 0.996},
    {TableId::power1, TestId::test1, 3, 10, 200, 20, 30, Pi0::pi2, 0.277},
    {TableId::power1, TestId::test2, 3, 10, 200, 20, 30, Pi0::pi2, 0.28},
    {TableId::power1, TestId::test3, 3, 10, 200, 20, 30, Pi0::pi2, 0.273},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 20, 30, Pi0::pi2, 0.907},
    {TableId::power1, TestId::test1, 3, 10, 200, 20, 30, Pi0::pi4, 0.969},
    {TableId::power1, TestId::test2, 3, 10, 200, 20, 30, Pi0::pi4, 0.976},
    {TableId::power1, TestId::test3, 3, 10, 200, 20, 30, Pi0::pi4, 0.975},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 20, 30, Pi0::pi4, 0.999},
    {TableId::power1, TestId::test1, 3, 10, 200, 30, 30, Pi0::pi2, 0.664},
    {TableId::power1, TestId::test2, 3, 10, 200, 30, 30, Pi0::pi2, 0.666},
    {TableId::power1, TestId::test3, 3, 10, 200, 30, 30, Pi0::pi2, 0.664},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 30, 30, Pi0::pi2, 0.994},
    {TableId::power1, TestId::test1, 3, 10, 200, 30, 30, Pi0::pi4, 1.0},
    {TableId::power1, TestId::test2, 3, 10, 200, 30, 30, Pi0::pi4, 1.0},
    {TableId::power1, TestId::test3, 3, 10, 200, 30, 30, Pi0::pi4, 1.0},
    {TableId::power1, TestId::chisq_pooled, 3, 10, 200, 30, 30, Pi0::pi4, 1.0},
    {TableId::power2, TestId::test1, 4, 5, 20, 5, 5, Pi0::pi2, 0.077},
    {TableId::power2, TestId::test2, 4, 5, 20, 5, 5, Pi0::pi2, 0.083},
    {TableId::power2, TestId::test3, 4, 5, 20, 5, 5, Pi0::pi2, 0.07},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 5, 5, Pi0::pi2, 0.047},
    {TableId::power2, TestId::test1, 4, 5, 20, 5, 5, Pi0::pi4, 0.097},
    {TableId::power2, TestId::test2, 4, 5, 20, 5, 5, Pi0::pi4, 0.105},
    {TableId::power2, TestId::test3, 4, 5, 20, 5, 5, Pi0::pi4, 0.089},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 5, 5, Pi0::pi4, 0.057},
    {TableId::power2, TestId::test1, 4, 5, 20, 5, 10, Pi0::pi2, 0.078},
    {TableId::power2, TestId::test2, 4, 5, 20, 5, 10, Pi0::pi2, 0.084},
    {TableId::power2, TestId::test3, 4, 5, 20, 5, 10, Pi0::pi2, 0.073},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 5, 10, Pi0::pi2, 0.05},
    {TableId::power2, TestId::test1, 4, 5, 20, 5, 10, Pi0::pi4, 0.105},
    {TableId::power2, TestId::test2, 4, 5, 20, 5, 10, Pi0::pi4, 0.112},
    {TableId::power2, TestId::test3, 4, 5, 20, 5, 10, Pi0::pi4, 0.1},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 5, 10, Pi0::pi4, 0.058},
    {TableId::power2, TestId::test1, 4, 5, 20, 10, 10, Pi0::pi2, 0.087},
    {TableId::power2, TestId::test2, 4, 5, 20, 10, 10, Pi0::pi2, 0.092},
    {TableId::power2, TestId::test3, 4, 5, 20, 10, 10, Pi0::pi2, 0.084},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 10, 10, Pi0::pi2, 0.05},
    {TableId::power2, TestId::test1, 4, 5, 20, 10, 10, Pi0::pi4, 0.14},
    {TableId::power2, TestId::test2, 4, 5, 20, 10, 10, Pi0::pi4, 0.146},
    {TableId::power2, TestId::test3, 4, 5, 20, 10, 10, Pi0::pi4, 0.137},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 10, 10, Pi0::pi4, 0.068},
    {TableId::power2, TestId::test1, 4, 5, 20, 20, 30, Pi0::pi2, 0.105},
    {TableId::power2, TestId::test2, 4, 5, 20, 20, 30, Pi0::pi2, 0.109},
    {TableId::power2, TestId::test3, 4, 5, 20, 20, 30, Pi0::pi2, 0.102},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 20, 30, Pi0::pi2, 0.056},
    {TableId::power2, TestId::test1, 4, 5, 20, 20, 30, Pi0::pi4, 0.181},
    {TableId::power2, TestId::test2, 4, 5, 20, 20, 30, Pi0::pi4, 0.186},
    {TableId::power2, TestId::test3, 4, 5, 20, 20, 30, Pi0::pi4, 0.177},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 20, 30, Pi0::pi4, 0.076},
    {TableId::power2, TestId::test1, 4, 5, 20, 30, 30, Pi0::pi2, 0.166},
    {TableId::power2, TestId::test2, 4, 5, 20, 30, 30, Pi0::pi2, 0.17},
    {TableId::power2, TestId::test3, 4, 5, 20, 30, 30, Pi0::pi2, 0.166},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 30, 30, Pi0::pi2, 0.069},
    {TableId::power2, TestId::test1, 4, 5, 20, 30, 30, Pi0::pi4, 0.385},
    {TableId::power2, TestId::test2, 4, 5, 20, 30, 30, Pi0::pi4, 0.389},
    {TableId::power2, TestId::test3, 4, 5, 20, 30, 30, Pi0::pi4, 0.383},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 20, 30, 30, Pi0::pi4, 0.129},
    {TableId::power2, TestId::test1, 4, 5, 50, 5, 5, Pi0::pi2, 0.079},
    {TableId::power2, TestId::test2, 4, 5, 50, 5, 5, Pi0::pi2, 0.083},
    {TableId::power2, TestId::test3, 4, 5, 50, 5, 5, Pi0::pi2, 0.075},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 5, 5, Pi0::pi2, 0.05},
    {TableId::power2, TestId::test1, 4, 5, 50, 5, 5, Pi0::pi4, 0.109},
    {TableId::power2, TestId::test2, 4, 5, 50, 5, 5, Pi0::pi4, 0.115},
    {TableId::power2, TestId::test3, 4, 5, 50, 5, 5, Pi0::pi4, 0.104},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 5, 5, Pi0::pi4, 0.06},
    {TableId::power2, TestId::test1, 4, 5, 50, 5, 10, Pi0::pi2, 0.079},
    {TableId::power2, TestId::test2, 4, 5, 50, 5, 10, Pi0::pi2, 0.084},
    {TableId::power2, TestId::test3, 4, 5, 50, 5, 10, Pi0::pi2, 0.077},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 5, 10, Pi0::pi2, 0.052},
    {TableId::power2, TestId::test1, 4, 5, 50, 5, 10, Pi0::pi4, 0.126},
    {TableId::power2, TestId::test2, 4, 5, 50, 5, 10, Pi0::pi4, 0.133},
    {TableId::power2, TestId::test3, 4, 5, 50, 5, 10, Pi0::pi4, 0.123},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 5, 10, Pi0::pi4, 0.066},
    {TableId::power2, TestId::test1, 4, 5, 50, 10, 10, Pi0::pi2, 0.102},
    {TableId::power2, TestId::test2, 4, 5, 50, 10, 10, Pi0::pi2, 0.105},
    {TableId::power2, TestId::test3, 4, 5, 50, 10, 10, Pi0::pi2, 0.101},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 10, 10, Pi0::pi2, 0.052},
    {TableId::power2, TestId::test1, 4, 5, 50, 10, 10, Pi0::pi4, 0.182},
    {TableId::power2, TestId::test2, 4, 5, 50, 10, 10, Pi0::pi4, 0.186},
    {TableId::power2, TestId::test3, 4, 5, 50, 10, 10, Pi0::pi4, 0.179},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 10, 10, Pi0::pi4, 0.075},
    {TableId::power2, TestId::test1, 4, 5, 50, 20, 30, Pi0::pi2, 0.131},
    {TableId::power2, TestId::test2, 4, 5, 50, 20, 30, Pi0::pi2, 0.133},
    {TableId::power2, TestId::test3, 4, 5, 50, 20, 30, Pi0::pi2, 0.128},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 20, 30, Pi0::pi2, 0.059},
    {TableId::power2, TestId::test1, 4, 5, 50, 20, 30, Pi0::pi4, 0.286},
    {TableId::power2, TestId::test2, 4, 5, 50, 20, 30, Pi0::pi4, 0.289},
    {TableId::power2, TestId::test3, 4, 5, 50, 20, 30, Pi0::pi4, 0.285},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 20, 30, Pi0::pi4, 0.099},
    {TableId::power2, TestId::test1, 4, 5, 50, 30, 30, Pi0::pi2, 0.256},
    {TableId::power2, TestId::test2, 4, 5, 50, 30, 30, Pi0::pi2, 0.247},
    {TableId::power2, TestId::test3, 4, 5, 50, 30, 30, Pi0::pi2, 0.244},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 30, 30, Pi0::pi2, 0.067},
    {TableId::power2, TestId::test1, 4, 5, 50, 30, 30, Pi0::pi4, 0.614},
    {TableId::power2, TestId::test2, 4, 5, 50, 30, 30, Pi0::pi4, 0.615},
    {TableId::power2, TestId::test3, 4, 5, 50, 30, 30, Pi0::pi4, 0.613},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 50, 30, 30, Pi0::pi4, 0.168},
    {TableId::power2, TestId::test1, 4, 5, 200, 5, 5, Pi0::pi2, 0.097},
    {TableId::power2, TestId::test2, 4, 5, 200, 5, 5, Pi0::pi2, 0.105},
    {TableId::power2, TestId::test3, 4, 5, 200, 5, 5, Pi0::pi2, 0.095},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 5, 5, Pi0::pi2, 0.046},
    {TableId::power2, TestId::test1, 4, 5, 200, 5, 5, Pi0::pi4, 0.173},
    {TableId::power2, TestId::test2, 4, 5, 200, 5, 5, Pi0::pi4, 0.179},
    {TableId::power2, TestId::test3, 4, 5, 200, 5, 5, Pi0::pi4, 0.171},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 5, 5, Pi0::pi4, 0.086},
    {TableId::power2, TestId::test1, 4, 5, 200, 5, 10, Pi0::pi2, 0.113},
    {TableId::power2, TestId::test2, 4, 5, 200, 5, 10, Pi0::pi2, 0.116},
    {TableId::power2, TestId::test3, 4, 5, 200, 5, 10, Pi0::pi2, 0.111},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 5, 10, Pi0::pi2, 0.05},
    {TableId::power2, TestId::test1, 4, 5, 200, 5, 10, Pi0::pi4, 0.23},
    {TableId::power2, TestId::test2, 4, 5, 200, 5, 10, Pi0::pi4, 0.235},
    {TableId::power2, TestId::test3, 4, 5, 200, 5, 10, Pi0::pi4, 0.226},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 5, 10, Pi0::pi4, 0.102},
    {TableId::power2, TestId::test1, 4, 5, 200, 10, 10, Pi0::pi2, 0.151},
    {TableId::power2, TestId::test2, 4, 5, 200, 10, 10, Pi0::pi2, 0.153},
    {TableId::power2, TestId::test3, 4, 5, 200, 10, 10, Pi0::pi2, 0.148},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 10, 10, Pi0::pi2, 0.055},
    {TableId::power2, TestId::test1, 4, 5, 200, 10, 10, Pi0::pi4, 0.39},
    {TableId::power2, TestId::test2, 4, 5, 200, 10, 10, Pi0::pi4, 0.394},
    {TableId::power2, TestId::test3, 4, 5, 200, 10, 10, Pi0::pi4, 0.388},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 10, 10, Pi0::pi4, 0.141},
    {TableId::power2, TestId::test1, 4, 5, 200, 20, 30, Pi0::pi2, 0.23},
    {TableId::power2, TestId::test2, 4, 5, 200, 20, 30, Pi0::pi2, 0.238},
    {TableId::power2, TestId::test3, 4, 5, 200, 20, 30, Pi0::pi2, 0.228},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 20, 30, Pi0::pi2, 0.069},
    {TableId::power2, TestId::test1, 4, 5, 200, 20, 30, Pi0::pi4, 0.63},
    {TableId::power2, TestId::test2, 4, 5, 200, 20, 30, Pi0::pi4, 0.632},
    {TableId::power2, TestId::test3, 4, 5, 200, 20, 30, Pi0::pi4, 0.627},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 20, 30, Pi0::pi4, 0.205},
    {TableId::power2, TestId::test1, 4, 5, 200, 30, 30, Pi0::pi2, 0.548},
    {TableId::power2, TestId::test2, 4, 5, 200, 30, 30, Pi0::pi2, 0.55},
    {TableId::power2, TestId::test3, 4, 5, 200, 30, 30, Pi0::pi2, 0.548},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 30, 30, Pi0::pi2, 0.069},
    {TableId::power2, TestId::test1, 4, 5, 200, 30, 30, Pi0::pi4, 0.971},
    {TableId::power2, TestId::test2, 4, 5, 200, 30, 30, Pi0::pi4, 0.972},
    {TableId::power2, TestId::test3, 4, 5, 200, 30, 30, Pi0::pi4, 0.972},
    {TableId::power2, TestId::chisq_pooled, 4, 5, 200, 30, 30, Pi0::pi4, 0.365},
    {TableId::power2, TestId::test1, 4, 10, 20, 5, 5, Pi0::pi2, 0.096},
    {TableId::power2, TestId::test2, 4, 10, 20, 5, 5, Pi0::pi2, 0.102},
    {TableId::power2, TestId::test3, 4, 10, 20, 5, 5, Pi0::pi2, 0.09},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 5, 5, Pi0::pi2, 0.056},
    {TableId::power2, TestId::test1, 4, 10, 20, 5, 5, Pi0::pi4, 0.094},
    {TableId::power2, TestId::test2, 4, 10, 20, 5, 5, Pi0::pi4, 0.11},
    {TableId::power2, TestId::test3, 4, 10, 20, 5, 5, Pi0::pi4, 0.09},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 5, 5, Pi0::pi4, 0.053},
    {TableId::power2, TestId::test1, 4, 10, 20, 5, 10, Pi0::pi2, 0.111},
    {TableId::power2, TestId::test2, 4, 10, 20, 5, 10, Pi0::pi2, 0.126},
    {TableId::power2, TestId::test3, 4, 10, 20, 5, 10, Pi0::pi2, 0.108},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 5, 10, Pi0::pi2, 0.064},
    {TableId::power2, TestId::test1, 4, 10, 20, 5, 10, Pi0::pi4, 0.104},
    {TableId::power2, TestId::test2, 4, 10, 20, 5, 10, Pi0::pi4, 0.127},
    {TableId::power2, TestId::test3, 4, 10, 20, 5, 10, Pi0::pi4, 0.124},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 5, 10, Pi0::pi4, 0.062},
    {TableId::power2, TestId::test1, 4, 10, 20, 10, 10, Pi0::pi2, 0.158},
    {TableId::power2, TestId::test2, 4, 10, 20, 10, 10, Pi0::pi2, 0.17},
    {TableId::power2, TestId::test3, 4, 10, 20, 10, 10, Pi0::pi2, 0.156},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 10, 10, Pi0::pi2, 0.083},
    {TableId::power2, TestId::test1, 4, 10, 20, 10, 10, Pi0::pi4, 0.157},
    {TableId::power2, TestId::test2, 4, 10, 20, 10, 10, Pi0::pi4, 0.166},
    {TableId::power2, TestId::test3, 4, 10, 20, 10, 10, Pi0::pi4, 0.154},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 10, 10, Pi0::pi4, 0.08},
    {TableId::power2, TestId::test1, 4, 10, 20, 20, 30, Pi0::pi2, 0.225},
    {TableId::power2, TestId::test2, 4, 10, 20, 20, 30, Pi0::pi2, 0.233},
    {TableId::power2, TestId::test3, 4, 10, 20, 20, 30, Pi0::pi2, 0.219},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 20, 30, Pi0::pi2, 0.103},
    {TableId::power2, TestId::test1, 4, 10, 20, 20, 30, Pi0::pi4, 0.219},
    {TableId::power2, TestId::test2, 4, 10, 20, 20, 30, Pi0::pi4, 0.226},
    {TableId::power2, TestId::test3, 4, 10, 20, 20, 30, Pi0::pi4, 0.213},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 20, 30, Pi0::pi4, 0.105},
    {TableId::power2, TestId::test1, 4, 10, 20, 30, 30, Pi0::pi2, 0.471},
    {TableId::power2, TestId::test2, 4, 10, 20, 30, 30, Pi0::pi2, 0.477},
    {TableId::power2, TestId::test3, 4, 10, 20, 30, 30, Pi0::pi2, 0.471},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 30, 30, Pi0::pi2, 0.183},
    {TableId::power2, TestId::test1, 4, 10, 20, 30, 30, Pi0::pi4, 0.464},
    {TableId::power2, TestId::test2, 4, 10, 20, 30, 30, Pi0::pi4, 0.469},
    {TableId::power2, TestId::test3, 4, 10, 20, 30, 30, Pi0::pi4, 0.463},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 20, 30, 30, Pi0::pi4, 0.191},
    {TableId::power2, TestId::test1, 4, 10, 50, 5, 5, Pi0::pi2, 0.123},
    {TableId::power2, TestId::test2, 4, 10, 50, 5, 5, Pi0::pi2, 0.134},
    {TableId::power2, TestId::test3, 4, 10, 50, 5, 5, Pi0::pi2, 0.121},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 5, 5, Pi0::pi2, 0.071},
    {TableId::power2, TestId::test1, 4, 10, 50, 5, 5, Pi0::pi4, 0.115},
    {TableId::power2, TestId::test2, 4, 10, 50, 5, 5, Pi0::pi4, 0.126},
    {TableId::power2, TestId::test3, 4, 10, 50, 5, 5, Pi0::pi4, 0.112},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 5, 5, Pi0::pi4, 0.073},
    {TableId::power2, TestId::test1, 4, 10, 50, 5, 10, Pi0::pi2, 0.142},
    {TableId::power2, TestId::test2, 4, 10, 50, 5, 10, Pi0::pi2, 0.151},
    {TableId::power2, TestId::test3, 4, 10, 50, 5, 10, Pi0::pi2, 0.137},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 5, 10, Pi0::pi2, 0.08},
    {TableId::power2, TestId::test1, 4, 10, 50, 5, 10, Pi0::pi4, 0.153},
    {TableId::power2, TestId::test2, 4, 10, 50, 5, 10, Pi0::pi4, 0.165},
    {TableId::power2, TestId::test3, 4, 10, 50, 5, 10, Pi0::pi4, 0.148},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 5, 10, Pi0::pi4, 0.083},
    {TableId::power2, TestId::test1, 4, 10, 50, 10, 10, Pi0::pi2, 0.23},
    {TableId::power2, TestId::test2, 4, 10, 50, 10, 10, Pi0::pi2, 0.24},
    {TableId::power2, TestId::test3, 4, 10, 50, 10, 10, Pi0::pi2, 0.228},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 10, 10, Pi0::pi2, 0.116},
    {TableId::power2, TestId::test1, 4, 10, 50, 10, 10, Pi0::pi4, 0.23},
    {TableId::power2, TestId::test2, 4, 10, 50, 10, 10, Pi0::pi4, 0.239},
    {TableId::power2, TestId::test3, 4, 10, 50, 10, 10, Pi0::pi4, 0.228},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 10, 10, Pi0::pi4, 0.109},
    {TableId::power2, TestId::test1, 4, 10, 50, 20, 30, Pi0::pi2, 0.362},
    {TableId::power2, TestId::test2, 4, 10, 50, 20, 30, Pi0::pi2, 0.367},
    {TableId::power2, TestId::test3, 4, 10, 50, 20, 30, Pi0::pi2, 0.353},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 20, 30, Pi0::pi2, 0.156},
    {TableId::power2, TestId::test1, 4, 10, 50, 20, 30, Pi0::pi4, 0.364},
    {TableId::power2, TestId::test2, 4, 10, 50, 20, 30, Pi0::pi4, 0.368},
    {TableId::power2, TestId::test3, 4, 10, 50, 20, 30, Pi0::pi4, 0.354},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 20, 30, Pi0::pi4, 0.151},
    {TableId::power2, TestId::test1, 4, 10, 50, 30, 30, Pi0::pi2, 0.744},
    {TableId::power2, TestId::test2, 4, 10, 50, 30, 30, Pi0::pi2, 0.746},
    {TableId::power2, TestId::test3, 4, 10, 50, 30, 30, Pi0::pi2, 0.743},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 30, 30, Pi0::pi2, 0.29},
    {TableId::power2, TestId::test1, 4, 10, 50, 30, 30, Pi0::pi4, 0.736},
    {TableId::power2, TestId::test2, 4, 10, 50, 30, 30, Pi0::pi4, 0.739},
    {TableId::power2, TestId::test3, 4, 10, 50, 30, 30, Pi0::pi4, 0.736},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 50, 30, 30, Pi0::pi4, 0.295},
    {TableId::power2, TestId::test1, 4, 10, 200, 5, 5, Pi0::pi2, 0.204},
    {TableId::power2, TestId::test2, 4, 10, 200, 5, 5, Pi0::pi2, 0.214},
    {TableId::power2, TestId::test3, 4, 10, 200, 5, 5, Pi0::pi2, 0.204},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 5, 5, Pi0::pi2, 0.142},
    {TableId::power2, TestId::test1, 4, 10, 200, 5, 5, Pi0::pi4, 0.208},
    {TableId::power2, TestId::test2, 4, 10, 200, 5, 5, Pi0::pi4, 0.217},
    {TableId::power2, TestId::test3, 4, 10, 200, 5, 5, Pi0::pi4, 0.206},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 5, 5, Pi0::pi4, 0.145},
    {TableId::power2, TestId::test1, 4, 10, 200, 5, 10, Pi0::pi2, 0.296},
    {TableId::power2, TestId::test2, 4, 10, 200, 5, 10, Pi0::pi2, 0.304},
    {TableId::power2, TestId::test3, 4, 10, 200, 5, 10, Pi0::pi2, 0.29},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 5, 10, Pi0::pi2, 0.184},
    {TableId::power2, TestId::test1, 4, 10, 200, 5, 10, Pi0::pi4, 0.292},
    {TableId::power2, TestId::test2, 4, 10, 200, 5, 10, Pi0::pi4, 0.298},
    {TableId::power2, TestId::test3, 4, 10, 200, 5, 10, Pi0::pi4, 0.285},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 5, 10, Pi0::pi4, 0.186},
    {TableId::power2, TestId::test1, 4, 10, 200, 10, 10, Pi0::pi2, 0.512},
    {TableId::power2, TestId::test2, 4, 10, 200, 10, 10, Pi0::pi2, 0.52},
    {TableId::power2, TestId::test3, 4, 10, 200, 10, 10, Pi0::pi2, 0.512},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 10, 10, Pi0::pi2, 0.283},
    {TableId::power2, TestId::test1, 4, 10, 200, 10, 10, Pi0::pi4, 0.517},
    {TableId::power2, TestId::test2, 4, 10, 200, 10, 10, Pi0::pi4, 0.523},
    {TableId::power2, TestId::test3, 4, 10, 200, 10, 10, Pi0::pi4, 0.516},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 10, 10, Pi0::pi4, 0.286},
    {TableId::power2, TestId::test1, 4, 10, 200, 20, 30, Pi0::pi2, 0.785},
    {TableId::power2, TestId::test2, 4, 10, 200, 20, 30, Pi0::pi2, 0.785},
    {TableId::power2, TestId::test3, 4, 10, 200, 20, 30, Pi0::pi2, 0.777},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 20, 30, Pi0::pi2, 0.415},
    {TableId::power2, TestId::test1, 4, 10, 200, 20, 30, Pi0::pi4, 0.78},
    {TableId::power2, TestId::test2, 4, 10, 200, 20, 30, Pi0::pi4, 0.78},
    {TableId::power2, TestId::test3, 4, 10, 200, 20, 30, Pi0::pi4, 0.773},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 20, 30, Pi0::pi4, 0.412},
    {TableId::power2, TestId::test1, 4, 10, 200, 30, 30, Pi0::pi2, 0.996},
    {TableId::power2, TestId::test2, 4, 10, 200, 30, 30, Pi0::pi2, 0.996},
    {TableId::power2, TestId::test3, 4, 10, 200, 30, 30, Pi0::pi2, 0.996},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 30, 30, Pi0::pi2, 0.682},
    {TableId::power2, TestId::test1, 4, 10, 200, 30, 30, Pi0::pi4, 0.994},
    {TableId::power2, TestId::test2, 4, 10, 200, 30, 30, Pi0::pi4, 0.995},
    {TableId::power2, TestId::test3, 4, 10, 200, 30, 30, Pi0::pi4, 0.995},
    {TableId::power2, TestId::chisq_pooled, 4, 10, 200, 30, 30, Pi0::pi4, 0.68},
    {TableId::power3, TestId::test1, 5, 5, 20, 5, 5, Pi0::none, 0.293},
    {TableId::power3, TestId::test2, 5, 5, 20, 5, 5, Pi0::none, 0.311},
    {TableId::power3, TestId::test3, 5, 5, 20, 5, 5, Pi0::none, 0.281},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 20, 5, 5, Pi0::none, 0.077},
    {TableId::power3, TestId::test1, 5, 10, 20, 5, 5, Pi0::none, 0.32},
    {TableId::power3, TestId::test2, 5, 10, 20, 5, 5, Pi0::none, 0.347},
    {TableId::power3, TestId::test3, 5, 10, 20, 5, 5, Pi0::none, 0.312},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 20, 5, 5, Pi0::none, 0.082},
    {TableId::power3, TestId::test1, 5, 5, 20, 5, 10, Pi0::none, 0.393},
    {TableId::power3, TestId::test2, 5, 5, 20, 5, 10, Pi0::none, 0.404},
    {TableId::power3, TestId::test3, 5, 5, 20, 5, 10, Pi0::none, 0.383},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 20, 5, 10, Pi0::none, 0.092},
    {TableId::power3, TestId::test1, 5, 10, 20, 5, 10, Pi0::none, 0.436},
    {TableId::power3, TestId::test2, 5, 10, 20, 5, 10, Pi0::none, 0.46},
    {TableId::power3, TestId::test3, 5, 10, 20, 5, 10, Pi0::none, 0.432},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 20, 5, 10, Pi0::none, 0.102},
    {TableId::power3, TestId::test1, 5, 5, 20, 10, 10, Pi0::none, 0.609},
    {TableId::power3, TestId::test2, 5, 5, 20, 10, 10, Pi0::none, 0.617},
    {TableId::power3, TestId::test3, 5, 5, 20, 10, 10, Pi0::none, 0.602},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 20, 10, 10, Pi0::none, 0.12},
    {TableId::power3, TestId::test1, 5, 10, 20, 10, 10, Pi0::none, 0.689},
    {TableId::power3, TestId::test2, 5, 10, 20, 10, 10, Pi0::none, 0.703},
    {TableId::power3, TestId::test3, 5, 10, 20, 10, 10, Pi0::none, 0.685},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 20, 10, 10, Pi0::none, 0.144},
    {TableId::power3, TestId::test1, 5, 5, 20, 20, 30, Pi0::none, 0.82},
    {TableId::power3, TestId::test2, 5, 5, 20, 20, 30, Pi0::none, 0.823},
    {TableId::power3, TestId::test3, 5, 5, 20, 20, 30, Pi0::none, 0.818},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 20, 20, 30, Pi0::none, 0.156},
    {TableId::power3, TestId::test1, 5, 10, 20, 20, 30, Pi0::none, 0.889},
    {TableId::power3, TestId::test2, 5, 10, 20, 20, 30, Pi0::none, 0.895},
    {TableId::power3, TestId::test3, 5, 10, 20, 20, 30, Pi0::none, 0.888},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 20, 20, 30, Pi0::none, 0.213},
    {TableId::power3, TestId::test1, 5, 5, 20, 30, 30, Pi0::none, 0.99},
    {TableId::power3, TestId::test2, 5, 5, 20, 30, 30, Pi0::none, 0.99},
    {TableId::power3, TestId::test3, 5, 5, 20, 30, 30, Pi0::none, 0.99},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 20, 30, 30, Pi0::none, 0.29},
    {TableId::power3, TestId::test1, 5, 10, 20, 30, 30, Pi0::none, 0.997},
    {TableId::power3, TestId::test2, 5, 10, 20, 30, 30, Pi0::none, 0.997},
    {TableId::power3, TestId::test3, 5, 10, 20, 30, 30, Pi0::none, 0.997},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 20, 30, 30, Pi0::none, 0.372},
    {TableId::power3, TestId::test1, 5, 5, 50, 5, 5, Pi0::none, 0.486},
    {TableId::power3, TestId::test2, 5, 5, 50, 5, 5, Pi0::none, 0.496},
    {TableId::power3, TestId::test3, 5, 5, 50, 5, 5, Pi0::none, 0.473},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 50, 5, 5, Pi0::none, 0.077},
    {TableId::power3, TestId::test1, 5, 10, 50, 5, 5, Pi0::none, 0.545},
    {TableId::power3, TestId::test2, 5, 10, 50, 5, 5, Pi0::none, 0.564},
    {TableId::power3, TestId::test3, 5, 10, 50, 5, 5, Pi0::none, 0.54},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 50, 5, 5, Pi0::none, 0.084},
    {TableId::power3, TestId::test1, 5, 5, 50, 5, 10, Pi0::none, 0.638},
    {TableId::power3, TestId::test2, 5, 5, 50, 5, 10, Pi0::none, 0.645},
    {TableId::power3, TestId::test3, 5, 5, 50, 5, 10, Pi0::none, 0.631},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 50, 5, 10, Pi0::none, 0.094},
    {TableId::power3, TestId::test1, 5, 10, 50, 5, 10, Pi0::none, 0.72},
    {TableId::power3, TestId::test2, 5, 10, 50, 5, 10, Pi0::none, 0.738},
    {TableId::power3, TestId::test3, 5, 10, 50, 5, 10, Pi0::none, 0.718},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 50, 5, 10, Pi0::none, 0.107},
    {TableId::power3, TestId::test1, 5, 5, 50, 10, 10, Pi0::none, 0.891},
    {TableId::power3, TestId::test2, 5, 5, 50, 10, 10, Pi0::none, 0.894},
    {TableId::power3, TestId::test3, 5, 5, 50, 10, 10, Pi0::none, 0.888},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 50, 10, 10, Pi0::none, 0.121},
    {TableId::power3, TestId::test1, 5, 10, 50, 10, 10, Pi0::none, 0.731},
    {TableId::power3, TestId::test2, 5, 10, 50, 10, 10, Pi0::none, 0.756},
    {TableId::power3, TestId::test3, 5, 10, 50, 10, 10, Pi0::none, 0.729},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 50, 10, 10, Pi0::none, 0.149},
    {TableId::power3, TestId::test1, 5, 5, 50, 20, 30, Pi0::none, 0.985},
    {TableId::power3, TestId::test2, 5, 5, 50, 20, 30, Pi0::none, 0.986},
    {TableId::power3, TestId::test3, 5, 5, 50, 20, 30, Pi0::none, 0.985},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 50, 20, 30, Pi0::none, 0.159},
    {TableId::power3, TestId::test1, 5, 10, 50, 20, 30, Pi0::none, 0.787},
    {TableId::power3, TestId::test2, 5, 10, 50, 20, 30, Pi0::none, 0.793},
    {TableId::power3, TestId::test3, 5, 10, 50, 20, 30, Pi0::none, 0.789},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 50, 20, 30, Pi0::none, 0.216},
    {TableId::power3, TestId::test1, 5, 5, 50, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test2, 5, 5, 50, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test3, 5, 5, 50, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 50, 30, 30, Pi0::none, 0.294},
    {TableId::power3, TestId::test1, 5, 10, 50, 30, 30, Pi0::none, 0.862},
    {TableId::power3, TestId::test2, 5, 10, 50, 30, 30, Pi0::none, 0.872},
    {TableId::power3, TestId::test3, 5, 10, 50, 30, 30, Pi0::none, 0.86},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 50, 30, 30, Pi0::none, 0.367},
    {TableId::power3, TestId::test1, 5, 5, 200, 5, 5, Pi0::none, 0.909},
    {TableId::power3, TestId::test2, 5, 5, 200, 5, 5, Pi0::none, 0.919},
    {TableId::power3, TestId::test3, 5, 5, 200, 5, 5, Pi0::none, 0.907},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 200, 5, 5, Pi0::none, 0.078},
    {TableId::power3, TestId::test1, 5, 10, 200, 5, 5, Pi0::none, 0.956},
    {TableId::power3, TestId::test2, 5, 10, 200, 5, 5, Pi0::none, 0.958},
    {TableId::power3, TestId::test3, 5, 10, 200, 5, 5, Pi0::none, 0.956},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 200, 5, 5, Pi0::none, 0.094},
    {TableId::power3, TestId::test1, 5, 5, 200, 5, 10, Pi0::none, 0.952},
    {TableId::power3, TestId::test2, 5, 5, 200, 5, 10, Pi0::none, 0.962},
    {TableId::power3, TestId::test3, 5, 5, 200, 5, 10, Pi0::none, 0.948},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 200, 5, 10, Pi0::none, 0.095},
    {TableId::power3, TestId::test1, 5, 10, 200, 5, 10, Pi0::none, 0.993},
    {TableId::power3, TestId::test2, 5, 10, 200, 5, 10, Pi0::none, 0.993},
    {TableId::power3, TestId::test3, 5, 10, 200, 5, 10, Pi0::none, 0.993},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 200, 5, 10, Pi0::none, 0.109},
    {TableId::power3, TestId::test1, 5, 5, 200, 10, 10, Pi0::none, 0.999},
    {TableId::power3, TestId::test2, 5, 5, 200, 10, 10, Pi0::none, 0.999},
    {TableId::power3, TestId::test3, 5, 5, 200, 10, 10, Pi0::none, 0.999},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 200, 10, 10, Pi0::none, 0.123},
    {TableId::power3, TestId::test1, 5, 10, 200, 10, 10, Pi0::none, 0.996},
    {TableId::power3, TestId::test2, 5, 10, 200, 10, 10, Pi0::none, 0.996},
    {TableId::power3, TestId::test3, 5, 10, 200, 10, 10, Pi0::none, 0.996},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 200, 10, 10, Pi0::none, 0.155},
    {TableId::power3, TestId::test1, 5, 5, 200, 20, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test2, 5, 5, 200, 20, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test3, 5, 5, 200, 20, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 200, 20, 30, Pi0::none, 0.164},
    {TableId::power3, TestId::test1, 5, 10, 200, 20, 30, Pi0::none, 0.998},
    {TableId::power3, TestId::test2, 5, 10, 200, 20, 30, Pi0::none, 0.999},
    {TableId::power3, TestId::test3, 5, 10, 200, 20, 30, Pi0::none, 0.998},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 200, 20, 30, Pi0::none, 0.284},
    {TableId::power3, TestId::test1, 5, 5, 200, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test2, 5, 5, 200, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::test3, 5, 5, 200, 30, 30, Pi0::none, 1.0},
    {TableId::power3, TestId::chisq_pooled, 5, 5, 200, 30, 30, Pi0::none, 0.3},
    {TableId::power3, TestId::test1, 5, 10, 200, 30, 30, Pi0::none, 0.999},
    {TableId::power3, TestId::test2, 5, 10, 200, 30, 30, Pi0::none, 0.999},
    {TableId::power3, TestId::test3, 5, 10, 200, 30, 30, Pi0::none, 0.999},
    {TableId::power3, TestId::chisq_pooled, 5, 10, 200, 30, 30, Pi0::none, 0.364},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 5, 5, Pi0::pi2, 0.028},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 5, 5, Pi0::pi4, 0.029},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 5, 5, Pi0::pi2, 0.027},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 5, 5, Pi0::pi4, 0.043},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 20, 5, 5, Pi0::none, 0.064},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 5, 5, Pi0::pi2, 0.014},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 5, 5, Pi0::pi4, 0.009},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 5, 5, Pi0::pi2, 0.011},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 5, 5, Pi0::pi4, 0.009},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 20, 5, 5, Pi0::none, 0.024},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 5, 10, Pi0::pi2, 0.035},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 5, 10, Pi0::pi4, 0.055},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 5, 10, Pi0::pi2, 0.035},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 5, 10, Pi0::pi4, 0.057},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 20, 5, 10, Pi0::none, 0.121},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 5, 10, Pi0::pi2, 0.026},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 5, 10, Pi0::pi4, 0.027},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 5, 10, Pi0::pi2, 0.027},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 5, 10, Pi0::pi4, 0.027},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 20, 5, 10, Pi0::none, 0.086},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 10, 10, Pi0::pi2, 0.046},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 10, 10, Pi0::pi4, 0.088},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 10, 10, Pi0::pi2, 0.04},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 10, 10, Pi0::pi4, 0.1},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 20, 10, 10, Pi0::none, 0.239},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 10, 10, Pi0::pi2, 0.028},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 10, 10, Pi0::pi4, 0.045},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 10, 10, Pi0::pi2, 0.029},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 10, 10, Pi0::pi4, 0.073},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 20, 10, 10, Pi0::none, 0.171},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 20, 30, Pi0::pi2, 0.081},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 20, 30, Pi0::pi4, 0.342},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 20, 30, Pi0::pi2, 0.101},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 20, 30, Pi0::pi4, 0.332},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 20, 20, 30, Pi0::none, 0.754},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 20, 30, Pi0::pi2, 0.071},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 20, 30, Pi0::pi4, 0.447},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 20, 30, Pi0::pi2, 0.075},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 20, 30, Pi0::pi4, 0.427},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 20, 20, 30, Pi0::none, 0.762},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 30, 30, Pi0::pi2, 0.117},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 20, 30, 30, Pi0::pi4, 0.493},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 30, 30, Pi0::pi2, 0.131},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 20, 30, 30, Pi0::pi4, 0.506},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 20, 30, 30, Pi0::none, 0.838},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 30, 30, Pi0::pi2, 0.106},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 20, 30, 30, Pi0::pi4, 0.658},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 30, 30, Pi0::pi2, 0.135},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 20, 30, 30, Pi0::pi4, 0.675},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 20, 30, 30, Pi0::none, 0.907},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 5, 5, Pi0::pi2, 0.012},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 5, 5, Pi0::pi4, 0.009},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 5, 5, Pi0::pi2, 0.009},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 5, 5, Pi0::pi4, 0.008},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 50, 5, 5, Pi0::none, 0.024},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 5, 5, Pi0::pi2, 0.005},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 5, 5, Pi0::pi4, 0.004},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 5, 5, Pi0::pi2, 0.003},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 5, 5, Pi0::pi4, 0.002},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 50, 5, 5, Pi0::none, 0.008},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 5, 10, Pi0::pi2, 0.042},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 5, 10, Pi0::pi4, 0.043},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 5, 10, Pi0::pi2, 0.025},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 5, 10, Pi0::pi4, 0.052},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 50, 5, 10, Pi0::none, 0.102},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 5, 10, Pi0::pi2, 0.013},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 5, 10, Pi0::pi4, 0.019},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 5, 10, Pi0::pi2, 0.012},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 5, 10, Pi0::pi4, 0.015},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 50, 5, 10, Pi0::none, 0.048},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 10, 10, Pi0::pi2, 0.033},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 10, 10, Pi0::pi4, 0.082},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 10, 10, Pi0::pi2, 0.04},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 10, 10, Pi0::pi4, 0.074},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 50, 10, 10, Pi0::none, 0.218},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 10, 10, Pi0::pi2, 0.017},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 10, 10, Pi0::pi4, 0.04},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 10, 10, Pi0::pi2, 0.014},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 10, 10, Pi0::pi4, 0.042},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 50, 10, 10, Pi0::none, 0.16},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 20, 30, Pi0::pi2, 0.088},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 20, 30, Pi0::pi4, 0.361},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 20, 30, Pi0::pi2, 0.084},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 20, 30, Pi0::pi4, 0.358},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 50, 20, 30, Pi0::none, 0.819},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 20, 30, Pi0::pi2, 0.07},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 20, 30, Pi0::pi4, 0.42},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 20, 30, Pi0::pi2, 0.061},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 20, 30, Pi0::pi4, 0.462},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 50, 20, 30, Pi0::none, 0.874},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 30, 30, Pi0::pi2, 0.115},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 50, 30, 30, Pi0::pi4, 0.539},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 30, 30, Pi0::pi2, 0.106},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 50, 30, 30, Pi0::pi4, 0.544},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 50, 30, 30, Pi0::none, 0.923},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 30, 30, Pi0::pi2, 0.077},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 50, 30, 30, Pi0::pi4, 0.737},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 30, 30, Pi0::pi2, 0.098},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 50, 30, 30, Pi0::pi4, 0.717},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 50, 30, 30, Pi0::none, 0.968},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 5, 5, Pi0::pi2, 0.03},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 5, 5, Pi0::pi4, 0.044},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 5, 5, Pi0::pi2, 0.038},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 5, 5, Pi0::pi4, 0.05},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 200, 5, 5, Pi0::none, 0.089},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 5, 5, Pi0::pi2, 0.006},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 5, 5, Pi0::pi4, 0.013},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 5, 5, Pi0::pi2, 0.005},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 5, 5, Pi0::pi4, 0.01},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 200, 5, 5, Pi0::none, 0.04},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 5, 10, Pi0::pi2, 0.109},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 5, 10, Pi0::pi4, 0.171},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 5, 10, Pi0::pi2, 0.126},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 5, 10, Pi0::pi4, 0.15},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 200, 5, 10, Pi0::none, 0.394},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 5, 10, Pi0::pi2, 0.058},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 5, 10, Pi0::pi4, 0.082},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 5, 10, Pi0::pi2, 0.054},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 5, 10, Pi0::pi4, 0.064},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 200, 5, 10, Pi0::none, 0.248},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 10, 10, Pi0::pi2, 0.151},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 10, 10, Pi0::pi4, 0.26},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 10, 10, Pi0::pi2, 0.161},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 10, 10, Pi0::pi4, 0.289},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 200, 10, 10, Pi0::none, 0.657},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 10, 10, Pi0::pi2, 0.067},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 10, 10, Pi0::pi4, 0.13},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 10, 10, Pi0::pi2, 0.058},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 10, 10, Pi0::pi4, 0.125},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 200, 10, 10, Pi0::none, 0.492},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 20, 30, Pi0::pi2, 0.284},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 20, 30, Pi0::pi4, 0.833},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 20, 30, Pi0::pi2, 0.305},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 20, 30, Pi0::pi4, 0.839},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 200, 20, 30, Pi0::none, 0.998},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 20, 30, Pi0::pi2, 0.201},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 20, 30, Pi0::pi4, 0.886},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 20, 30, Pi0::pi2, 0.227},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 20, 30, Pi0::pi4, 0.899},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 200, 20, 30, Pi0::none, 1.0},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 30, 30, Pi0::pi2, 0.333},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 5, 200, 30, 30, Pi0::pi4, 0.958},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 30, 30, Pi0::pi2, 0.359},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 5, 200, 30, 30, Pi0::pi4, 0.959},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 5, 200, 30, 30, Pi0::none, 1.0},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 30, 30, Pi0::pi2, 0.31},
    {TableId::powerCM, TestId::minp_bootstrap, 3, 10, 200, 30, 30, Pi0::pi4, 0.999},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 30, 30, Pi0::pi2, 0.319},
    {TableId::powerCM, TestId::minp_bootstrap, 4, 10, 200, 30, 30, Pi0::pi4, 0.996},
    {TableId::powerCM, TestId::minp_bootstrap, 5, 10, 200, 30, 30, Pi0::none, 1.0},
};

}  // namespace

std::string_view to_string(TableId t) noexcept {
  switch (t) {
    case TableId::tab8: return "tab8";
    case TableId::tab88: return "tab88";
    case TableId::trv1: return "trv1";
    case TableId::trv2: return "trv2";
    case TableId::tab2: return "tab2";
    case TableId::tab3: return "tab3";
    case TableId::tab4: return "tab4";
    case TableId::tab5: return "tab5";
    case TableId::tab6: return "tab6";
    case TableId::rev1: return "rev1";
    case TableId::rev2: return "rev2";
    case TableId::rev3: return "rev3";
    case TableId::power1: return "power1";
    case TableId::power2: return "power2";
    case TableId::power3: return "power3";
    case TableId::powerCM: return "powerCM";
  }
  return "unknown";
}

TableId parse_table_id(std::string_view name) {
  for (TableId t : kAllTables) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorKind::UnknownTable, "unknown table '" + std::string(name) + "'");
}

std::span<const ReferenceCell> reference_cells() noexcept { return kCells; }

std::vector<ReferenceCell> reference_cells(TableId table) {
  std::vector<ReferenceCell> out;
  for (const auto& c : kCells) {
    if (c.table == table) out.push_back(c);
  }
  return out;
}

std::int64_t default_reps(TableId table) noexcept { return table == TableId::powerCM ? 1000 : 10000; }

}  // namespace mhtest
