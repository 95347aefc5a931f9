#include "cli/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qmetric/algebra_maps.hpp"
#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/lip_norms.hpp"

namespace qmetric::cli {

namespace {

struct TrialOutcome {
  double residual;
  double tolerance;
};

struct SuiteContext {
  std::size_t n;
  std::size_t k;
  std::uint64_t seed;
  std::uint64_t stream_seed(std::size_t trial, std::uint64_t stream) const {
    return derive_seed(seed, trial, stream);
  }
};

// C*-identity on a general matrix.
TrialOutcome cstar_trial(const SuiteContext& c, std::size_t t) {
  const auto a = random_gaussian(c.n, c.n, c.stream_seed(t, 0));
  const double na = operator_norm(a);
  const double res = std::abs(operator_norm(adjoint(a) * a) - na * na) / (1.0 + na * na);
  return {res, 1e-8};
}

TrialOutcome embed_trial(const SuiteContext& c, std::size_t t) {
  const DivisorPair pair(c.k, c.n);
  const auto a = random_gaussian(c.k, c.k, c.stream_seed(t, 0));
  const auto b = random_gaussian(c.k, c.k, c.stream_seed(t, 1));
  const double iso = std::abs(operator_norm(embed(pair, a)) - operator_norm(a));
  const double mult = max_abs_diff(embed(pair, a * b), embed(pair, a) * embed(pair, b));
  const double star = max_abs_diff(embed(pair, adjoint(a)), adjoint(embed(pair, a)));
  return {std::max({iso, mult, star}), 1e-10};
}

TrialOutcome trace_trial(const SuiteContext& c, std::size_t t) {
  const DivisorPair pair(c.k, c.n);
  const auto a = random_gaussian(c.k, c.k, c.stream_seed(t, 0));
  return {std::abs(normalized_trace(embed(pair, a)) - normalized_trace(a)), 1e-12};
}

// Cross-agreement of the entrywise, block-mean and basis-sum forms.
TrialOutcome projection_trial(const SuiteContext& c, std::size_t t) {
  const DivisorPair pair(c.k, c.n);
  const auto a = random_gaussian(c.n, c.n, c.stream_seed(t, 0));
  const auto p = cond_expectation(pair, a);
  const double res = std::max(max_abs_diff(p, cond_expectation_blockmean(pair, a)),
                              max_abs_diff(p, cond_expectation_basis(pair, a)));
  return {res, 1e-13};
}

// Worst relative violation over the trace variant and, if 1 < k < n, the divisor variant.
TrialOutcome leibniz_trial(const SuiteContext& c, std::size_t t) {
  const auto a = random_hermitian(c.n, c.stream_seed(t, 0));
  const auto b = random_hermitian(c.n, c.stream_seed(t, 1));
  std::vector<LipSpec> specs{LipSpec::trace(c.n)};
  if (c.k > 1 && c.k < c.n) specs.push_back(LipSpec::divisor(c.n, c.k));
  double worst = 0.0;
  for (const auto& spec : specs) {
    const auto r = check_quasi_leibniz(spec, a, b);
    worst = std::max(worst, std::max(0.0, -r.margin) / r.scale);
  }
  return {worst, 1e-9};
}

TrialOutcome unitary_trial(const SuiteContext& c, std::size_t t) {
  const auto a = random_hermitian(c.n, c.stream_seed(t, 0));
  const auto u = random_unitary(c.n, c.stream_seed(t, 1));
  return {check_unitary_invariance(c.n, u, a) / (1.0 + operator_norm(a)), 1e-9};
}

// Scalars are in the kernel; a unit-norm traceless element is not.
TrialOutcome kernel_trial(const SuiteContext& c, std::size_t t) {
  std::vector<LipSpec> specs{LipSpec::trace(c.n)};
  if (c.k > 1 && c.k < c.n) specs.push_back(LipSpec::divisor(c.n, c.k));
  const auto h = random_hermitian(c.n, c.stream_seed(t, 0));
  const double r = h.matrix()(0, 0).real() * 10.0;
  const HermitianMatrix scalar(Matrix::identity(c.n) * r);
  Matrix centered = h.matrix() - Matrix::identity(c.n) * normalized_trace(h.matrix());
  centered *= 1.0 / operator_norm(centered);
  const HermitianMatrix off(std::move(centered));
  double residual = 0.0;
  for (const auto& spec : specs) {
    const bool ok = check_kernel(spec, scalar) && check_kernel(spec, off) &&
                    lip_eval(spec, off) > kKernelSeminormThreshold;
    residual = std::max(residual, ok ? lip_eval(spec, scalar) : 1.0);
  }
  return {residual, kKernelSeminormThreshold};
}

struct SuiteDef {
  const char* name;
  bool needs_pair;
  TrialOutcome (*fn)(const SuiteContext&, std::size_t);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"cstar", false, cstar_trial},         {"embed", true, embed_trial},
      {"trace", true, trace_trial},          {"projection", true, projection_trial},
      {"leibniz", false, leibniz_trial},     {"unitary", false, unitary_trial},
      {"kernel", false, kernel_trial},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<TrialRow> run_suite(const std::string& suite, std::size_t n, std::size_t k,
                                std::size_t trials, std::uint64_t seed, std::size_t threads) {
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const SuiteDef& d) { return suite == d.name; });
  if (it == suites().end()) throw ValidationError("unknown suite \"" + suite + "\"");
  if (n == 0) throw ValidationError("n must be positive");
  if (it->needs_pair) DivisorPair(k, n);  // validates
  if (std::string_view(it->name) == "leibniz" || std::string_view(it->name) == "unitary" ||
      std::string_view(it->name) == "kernel") {
    LipSpec::trace(n);
    if (k > 1 && k < n) LipSpec::divisor(n, k);
  }

  const SuiteContext ctx{n, k, seed};
  std::vector<TrialRow> rows(trials);
  auto work = [&](std::size_t t) {
    const auto o = it->fn(ctx, t);
    rows[t] = {suite, n, k, t, o.residual, o.tolerance, o.residual <= o.tolerance};
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(trials, 1));
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) work(t);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t t = w; t < trials; t += threads) work(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

}  // namespace qmetric::cli
