#ifndef ADAPTRIX_COMMON_HPP
#define ADAPTRIX_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adaptrix {

using Index = std::ptrdiff_t;

/// Dense row-major matrix; one row per observation.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

using Labels = std::vector<int>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside an operation's contract.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Input data is malformed, insufficient or geometrically degenerate.
class DataError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed (non-convergence, breakdown, ill-posed ratio).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// How a data-parallel kernel is executed. Both paths produce identical results.
enum class Execution { serial, parallel };

// Thread control. The count applies to every OpenMP kernel in the library.
void set_thread_count(int threads);
int thread_count();
/// Reads ADAPTRIX_THREADS; falls back to the number of logical cores.
int default_thread_count();

using Rng = std::mt19937_64;

/// Derives an independent seed for a named random sub-stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace adaptrix

#endif  // ADAPTRIX_COMMON_HPP
