#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <optional>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <boost/version.hpp>
#include <nlohmann/json.hpp>

#include "permlab/brownian_baseline.hpp"
#include "permlab/chain_sampler.hpp"
#include "permlab/errors.hpp"
#include "permlab/exact_oracle.hpp"
#include "permlab/intensity.hpp"
#include "permlab/io.hpp"
#include "permlab/order_construction.hpp"
#include "permlab/permuton_ops.hpp"
#include "permlab/transport.hpp"
#include "permlab/tree_density.hpp"

namespace permlab::cli {

namespace {

// Probability on Monte Carlo paths: "a/b" or a decimal.
double parse_probability(const std::string& text) {
  double p = 0.0;
  if (text.find('/') != std::string::npos) {
    p = to_double(parse_rational(text));
  } else {
    std::size_t used = 0;
    try {
      p = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw PreconditionError("cannot parse probability '" + text + "'");
  }
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("p must lie strictly between 0 and 1");
  return p;
}

// Probability on exact paths: rational only.
Rational parse_exact_probability(const std::string& text) {
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos)
    throw PreconditionError("exact paths take a rational p such as 1/2, got '" + text + "'");
  Rational p = parse_rational(text);
  if (!(p > 0 && p < 1)) throw PreconditionError("p must lie strictly between 0 and 1");
  return p;
}

void require_positive(const char* name, long long v) {
  if (v < 1) throw PreconditionError(std::string(name) + " must be >= 1");
}

std::string csv_law(const char* key, const std::vector<std::pair<std::string, Rational>>& rows) {
  std::ostringstream os;
  os << key << ",numerator,denominator\n";
  for (const auto& [k, r] : rows)
    os << k << ',' << numerator(r).str() << ',' << denominator(r).str() << '\n';
  return os.str();
}

std::string grid_csv(const GridMeasure& g) {
  std::ostringstream os;
  g.write_csv(os);
  return os.str();
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Params {
  std::string p = "1/2";
  int n = 5;
  int k = 20;
  int count = 1;
  long long draws = 100000;
  int depth = 0;
  int bound = kDefaultExactBound;
  double x = 0.25;
  double y = 0.5;
  double tol = 1e-10;
  double eps = 0.05;
  int reps = 1000;
  int iterations = 10;
  std::string method = "chain";
  std::string route = "pushforward";
  std::string start = "zero";
  std::vector<int> sizes;
  bool symbolic = false;
};

struct Command {
  std::string name;
  std::uint64_t default_seed = 0;
  std::function<std::string(const Params&, std::uint64_t seed, int threads)> body;
};

// --- sample -----------------------------------------------------------------

std::string sample_perm(const Params& a, std::uint64_t seed, int threads) {
  const double p = parse_probability(a.p);
  require_positive("--count", a.count);
  ChainConfig{p, seed, a.n}.validate();
  std::vector<Permutation> out;
  if (a.method == "chain") {
    out = sample_chain_batch(ChainConfig{p, seed, a.n}, a.count, threads);
  } else if (a.method == "lambda") {
    for (int i = 0; i < a.count; ++i) {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
      out.push_back(sample_lambda(a.n, p, rng));
    }
  } else {
    throw PreconditionError("--method must be chain or lambda");
  }
  std::string s;
  for (const auto& pi : out) s += pi.to_string() + "\n";
  return s;
}

std::string sample_cograph(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  require_positive("--count", a.count);
  ChainConfig{p, seed, a.n}.validate();
  std::ostringstream os;
  os << "sample,n,edges\n";
  for (int i = 0; i < a.count; ++i) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const SimpleGraph g = sample_cograph_chain(a.n, p, rng);
    os << i + 1 << ',' << g.size() << ',';
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
      os << (first ? "" : " ") << u << '-' << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string sample_stream(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  if (a.k < 0) throw PreconditionError("--k must be >= 0");
  Rng rng(seed);
  std::ostringstream os;
  OrderStream::generate(a.k, p, rng).write_csv(os);
  return os.str();
}

// --- exact ------------------------------------------------------------------

std::string exact_dist(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  if (a.symbolic) {
    std::ostringstream os;
    os << "perm,probability\n";
    for (const auto& [pi, poly] : exact_distribution_symbolic(a.n, a.bound))
      os << pi.compact() << ',' << poly.to_string() << '\n';
    return os.str();
  }
  const auto d = exact_distribution(a.n, parse_exact_probability(a.p), a.bound);
  std::ostringstream os;
  write_csv(os, d);
  return os.str();
}

std::string exact_oracle(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  const auto d = a.method == "lambda" ? enumerate_lambda(a.n, parse_exact_probability(a.p))
                                      : enumerate(a.n, parse_exact_probability(a.p));
  std::ostringstream os;
  write_csv(os, d);
  return os.str();
}

std::string exact_descents(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  std::vector<std::pair<std::string, Rational>> rows;
  for (const auto& [d, r] : descent_law(a.n, parse_exact_probability(a.p))) rows.emplace_back(std::to_string(d), r);
  return csv_law("descents", rows);
}

std::string exact_consistency(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  const Rational dev = check_consistency(a.n, parse_exact_probability(a.p));
  return "n,max_abs_deviation\n" + std::to_string(a.n) + "," + to_string(dev) + "\n";
}

std::string exact_self_similarity(const Params& a, std::uint64_t, int) {
  const Rational dev = check_self_similarity(a.n, parse_exact_probability(a.p));
  return "n,max_abs_deviation\n" + std::to_string(a.n) + "," + to_string(dev) + "\n";
}

std::string exact_cograph(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  const Rational p = parse_exact_probability(a.p);
  GraphLaw law;
  if (a.route == "pushforward")
    law = cograph_law(a.n, p);
  else if (a.route == "chain")
    law = cograph_chain_law(a.n, p);
  else if (a.route == "formula")
    law = cograph_formula_law(a.n, p);
  else
    throw PreconditionError("--route must be pushforward, chain or formula");
  std::vector<std::pair<std::string, Rational>> rows(law.begin(), law.end());
  return csv_law("graph", rows);
}

std::string exact_ninc(const Params& a, std::uint64_t, int) {
  require_positive("--n", a.n);
  if (a.n > a.bound) throw SizeBoundError("--n exceeds the exact bound");
  std::ostringstream os;
  os << "perm,count\n";
  for (const auto& pi : all_permutations(a.n))
    if (is_separable(pi)) os << pi.compact() << ',' << count_inc_trees(pi).str() << '\n';
  return os.str();
}

// --- density and intensity --------------------------------------------------

std::string density(const Params& a, std::uint64_t, int) {
  const double p = parse_probability(a.p);
  const auto d = intensity_density(p, a.x, a.y, a.tol);
  std::ostringstream os;
  os << "p,x,y,density,error\n"
     << fmt_double(p) << ',' << fmt_double(a.x) << ',' << fmt_double(a.y) << ','
     << (d.divergent ? std::string("divergent") : fmt_double(d.value)) << ',' << fmt_double(d.error) << '\n';
  return os.str();
}

std::string intensity_closed_form(const Params& a, std::uint64_t seed, int threads) {
  const double p = parse_probability(a.p);
  require_positive("--grid", a.k);
  require_positive("--draws", a.draws);
  return grid_csv(closed_form_grid(p, a.k, a.draws, seed, threads).mass);
}

std::string intensity_empirical(const Params& a, std::uint64_t seed, int threads) {
  const double p = parse_probability(a.p);
  require_positive("--grid", a.k);
  return grid_csv(empirical_intensity_grid(a.n, a.count, p, a.k, seed, threads));
}

std::string intensity_sampled(const Params& a, std::uint64_t seed, int threads) {
  const double p = parse_probability(a.p);
  require_positive("--grid", a.k);
  if (a.depth < 0) throw PreconditionError("--depth must be >= 0");
  return grid_csv(a.depth == 0 ? sampled_intensity_grid(p, a.k, a.draws, seed, threads)
                               : phi_intensity_grid(p, a.depth, a.k, a.draws, seed, threads));
}

// --- diagnostics ------------------------------------------------------------

std::string diag_convergence(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  std::vector<int> sizes = a.sizes.empty() ? std::vector<int>{10, 100, 1000} : a.sizes;
  int K = a.depth;
  for (int n : sizes) {
    require_positive("--sizes", n);
    K = std::max(K, n - 1);
  }
  Rng rng(seed);
  const OrderStream st = OrderStream::generate(K, p, rng);
  const StepFunction phi = phi_k(st, K);
  std::ostringstream os;
  os << "n,depth,l1\n";
  for (int n : sizes)
    os << n << ',' << K << ',' << fmt_double(l1_distance(f_of_perm(lambda_fast(st, n)), phi)) << '\n';
  return os.str();
}

std::string estimate_row(const char* model, const char* stat, double v, double se) {
  return std::string(model) + "," + stat + "," + fmt_double(v) + "," + fmt_double(se) + "\n";
}

std::string diag_descents(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  ChainConfig{p, seed, a.n}.validate();
  const Estimate e = dn_statistic(Model::Recursive, p, a.n, a.k, a.reps, seed);
  return "model,statistic,value,stderr\n" + estimate_row("recursive", "descent_density", e.value, e.stderr_);
}

std::string diag_phi(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  if (a.k < 0) throw PreconditionError("--k must be >= 0");
  Rng rng(seed);
  const StepFunction f = phi_k(OrderStream::generate(a.k, p, rng), a.k);
  std::ostringstream os;
  os << "left,right,value\n";
  for (int c = 0; c < f.cells(); ++c)
    os << fmt_double(f.breaks[static_cast<std::size_t>(c)]) << ',' << fmt_double(f.breaks[static_cast<std::size_t>(c) + 1])
       << ',' << fmt_double(f.values[static_cast<std::size_t>(c)]) << '\n';
  return os.str();
}

std::string diag_psi(const Params& a, std::uint64_t seed, int) {
  const double p = parse_probability(a.p);
  require_positive("--draws", a.draws);
  if (a.iterations < 0) throw PreconditionError("--iterations must be >= 0");
  Rng rng(seed);
  std::vector<double> nu(static_cast<std::size_t>(a.draws));
  if (a.start == "zero")
    std::fill(nu.begin(), nu.end(), 0.0);
  else if (a.start == "one")
    std::fill(nu.begin(), nu.end(), 1.0);
  else if (a.start == "beta")
    for (auto& v : nu) v = sample_beta({p, 1.0 - p}, rng);
  else
    throw PreconditionError("--start must be zero, one or beta");
  std::ostringstream os;
  os << "t,m1,m2,m3,m4\n";
  for (int t = 0; t <= a.iterations; ++t) {
    if (t > 0) nu = psi_iterate(nu, p, rng);
    double m[4] = {0, 0, 0, 0};
    for (double v : nu) {
      double q = v;
      for (double& mr : m) {
        mr += q;
        q *= v;
      }
    }
    os << t;
    for (double mr : m) os << ',' << fmt_double(mr / static_cast<double>(nu.size()));
    os << '\n';
  }
  return os.str();
}

std::string compare_brownian(const Params& a, std::uint64_t seed, int threads) {
  const double p = parse_probability(a.p);
  require_positive("--n", a.n);
  std::string s = "model,statistic,value,stderr\n";
  for (Model model : {Model::Recursive, Model::Brownian}) {
    const char* name = model == Model::Recursive ? "recursive" : "brownian";
    const Estimate e = dn_statistic(model, p, a.n, a.k, a.reps, seed);
    s += estimate_row(name, "descent_density", e.value, e.stderr_);
    const CornerFrequencies c = corner_events(model, p, a.eps, a.n, a.count, seed, threads);
    auto se = [&](double f) { return std::sqrt(f * (1 - f) / c.reps); };
    s += estimate_row(name, "corner_bl", c.bl, se(c.bl));
    s += estimate_row(name, "corner_tl", c.tl, se(c.tl));
    s += estimate_row(name, "corner_both", c.both, se(c.both));
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random separable permutations from an inflation chain: samplers, exact laws and permuton limits.",
               "permlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::optional<std::uint64_t> seed_flag;
  int threads = 1;
  std::string out_path, manifest_path;
  app.add_option("--seed", seed_flag, "Master seed (overrides PERMUTON_LAB_SEED and the subcommand default)");
  app.add_option("--threads", threads, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write data here (atomically) instead of stdout");
  app.add_option("--manifest", manifest_path, "Write a JSON run manifest here");

  Params a;
  const Command* selected = nullptr;
  std::string selected_path;
  std::vector<std::unique_ptr<Command>> commands;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::uint64_t seed,
                  std::function<std::string(const Params&, std::uint64_t, int)> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    commands.push_back(std::make_unique<Command>(Command{name, seed, std::move(body)}));
    const Command* cmd = commands.back().get();
    const std::string path = (parent == &app ? "" : parent->get_name() + " ") + name;
    sub->callback([&selected, &selected_path, cmd, path] {
      selected = cmd;
      selected_path = path;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto opt_p = [&](CLI::App* s, const char* help) { s->add_option("--p", a.p, help)->capture_default_str(); };

  // sample
  CLI::App* sample = group("sample", "Draw random objects from the inflation chain");
  {
    auto* s = leaf(sample, "perm",
                   "Chain permutations of size n: start from 1, repeatedly replace a uniform value by an "
                   "increasing pair (probability p) or a decreasing pair",
                   1001, sample_perm);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Probability of an increasing pair (decimal or a/b)");
    s->add_option("--count", a.count, "Number of samples")->capture_default_str();
    s->add_option("--method", a.method, "chain (inflation chain) or lambda (order built from uniform points)")
        ->capture_default_str();
  }
  {
    auto* s = leaf(sample, "cograph",
                   "Cographs from the vertex duplication chain: a uniform vertex is copied with the same "
                   "neighbours and joined to it with probability 1-p",
                   1002, sample_cograph);
    s->add_option("--n", a.n, "Number of vertices")->capture_default_str();
    opt_p(s, "Probability that the copy is not joined to the original");
    s->add_option("--count", a.count, "Number of samples")->capture_default_str();
  }
  {
    auto* s = leaf(sample, "stream", "Uniform points with random signs that define the limiting order", 1003,
                   sample_stream);
    s->add_option("--k", a.k, "Number of pairs")->capture_default_str();
    opt_p(s, "Probability of a plus sign");
  }

  // exact
  CLI::App* exact = group("exact", "Exact rational laws (p must be a rational such as 1/3)");
  {
    auto* s = leaf(exact, "dist",
                   "Law of the chain permutation of size n from counts of increasing decorated trees", 2001,
                   exact_dist);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Rational p");
    s->add_flag("--symbolic", a.symbolic, "Print probabilities as polynomials in p");
    s->add_option("--bound", a.bound, "Largest n allowed")->capture_default_str();
  }
  {
    auto* s = leaf(exact, "oracle", "Law of the chain by a forward pass over all states", 2002, exact_oracle);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Rational p");
    s->add_option("--method", a.method, "chain or lambda (rank insertion recursion)")->capture_default_str();
  }
  {
    auto* s = leaf(exact, "descents", "Descent count law, binomial with n-1 trials and parameter 1-p", 2003,
                   exact_descents);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Rational p");
  }
  {
    auto* s = leaf(exact, "consistency",
                   "Removing a uniform point from a size n+1 sample gives the size n law; prints the largest "
                   "deviation",
                   2004, exact_consistency);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Rational p");
  }
  {
    auto* s = leaf(exact, "self-similarity",
                   "The size n law is a sum or skew sum of two independent smaller samples with a uniform "
                   "split; prints the largest deviation",
                   2005, exact_self_similarity);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    opt_p(s, "Rational p");
  }
  {
    auto* s = leaf(exact, "cograph", "Law of the random cograph on n vertices, up to isomorphism", 2006,
                   exact_cograph);
    s->add_option("--n", a.n, "Number of vertices")->capture_default_str();
    opt_p(s, "Rational p");
    s->add_option("--route", a.route, "pushforward, chain or formula")->capture_default_str();
  }
  {
    auto* s = leaf(exact, "ninc", "Number of increasing decorated trees for each separable permutation", 2007,
                   exact_ninc);
    s->add_option("--n", a.n, "Size")->capture_default_str();
    s->add_option("--bound", a.bound, "Largest n allowed")->capture_default_str();
  }

  // density
  {
    auto* s = leaf(&app, "density",
                   "Density of the expected limit permuton at (x,y), by quadrature of its one dimensional "
                   "integral",
                   3001, density);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--x", a.x, "x in (0,1)")->capture_default_str();
    s->add_option("--y", a.y, "y in (0,1)")->capture_default_str();
    s->add_option("--tol", a.tol, "Relative tolerance")->capture_default_str();
  }

  // intensity
  CLI::App* intensity = group("intensity", "Grids of the expected limit permuton");
  {
    auto* s = leaf(intensity, "closed-form",
                   "Cell masses from the density; cells on the divergence line by conditional Monte Carlo",
                   4001, intensity_closed_form);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--grid", a.k, "Grid resolution")->capture_default_str();
    s->add_option("--draws", a.draws, "Monte Carlo draws per row with singular cells")->capture_default_str();
  }
  {
    auto* s = leaf(intensity, "empirical", "Average of the permuton grids of count chain permutations of size n",
                   4002, intensity_empirical);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--n", a.n, "Permutation size")->capture_default_str();
    s->add_option("--count", a.count, "Number of permutations")->capture_default_str();
    s->add_option("--grid", a.k, "Grid resolution")->capture_default_str();
  }
  {
    auto* s = leaf(intensity, "sampled",
                   "Histogram of (U, U X + (1-U) X') with X, X' Beta; with --depth K, of (U, phi_K(U)) instead",
                   4003, intensity_sampled);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--grid", a.k, "Grid resolution")->capture_default_str();
    s->add_option("--draws", a.draws, "Number of points")->capture_default_str();
    s->add_option("--depth", a.depth, "0 for the Beta route, K > 0 for the stream route")->capture_default_str();
  }

  // diag
  CLI::App* diag = group("diag", "Convergence diagnostics");
  {
    auto* s = leaf(diag, "convergence",
                   "L1 distance between the step function of the size n order and the limit function, all "
                   "on one shared stream",
                   5001, diag_convergence);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--sizes", a.sizes, "Sizes n")->delimiter(',');
    s->add_option("--depth", a.depth, "Depth K of the limit function (at least max n - 1)")->capture_default_str();
  }
  {
    auto* s = leaf(diag, "descents",
                   "Descent density of size k patterns of one large chain permutation; tends to 1-p", 5002,
                   diag_descents);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--n", a.n, "Size of the sampled permutation")->capture_default_str();
    s->add_option("--k", a.k, "Pattern size")->capture_default_str();
    s->add_option("--reps", a.reps, "Number of patterns")->capture_default_str();
  }
  {
    auto* s = leaf(diag, "phi", "The depth k step function of the limiting order", 5003, diag_phi);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--k", a.k, "Depth")->capture_default_str();
  }
  {
    auto* s = leaf(diag, "psi",
                   "Moments of iterates of Y = B V + (1-V) X; the Beta(p,1-p) law is the fixed point", 5004,
                   diag_psi);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--iterations", a.iterations, "Number of iterations")->capture_default_str();
    s->add_option("--draws", a.draws, "Sample size")->capture_default_str();
    s->add_option("--start", a.start, "zero, one or beta")->capture_default_str();
  }

  // compare
  CLI::App* compare = group("compare", "Compare with the Brownian separable permuton");
  {
    auto* s = leaf(compare, "brownian",
                   "Descent density and corner events for the chain and for a discrete Brownian excursion "
                   "surrogate",
                   6001, compare_brownian);
    opt_p(s, "p (decimal or a/b)");
    s->add_option("--n", a.n, "Permutation size (excursion half length for the surrogate)")->capture_default_str();
    s->add_option("--k", a.k, "Pattern size for the descent density")->capture_default_str();
    s->add_option("--reps", a.reps, "Patterns for the descent density")->capture_default_str();
    s->add_option("--count", a.count, "Realizations for the corner events")->capture_default_str();
    s->add_option("--eps", a.eps, "Corner size in (0,1/2)")->capture_default_str();
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    // --help and --help-all
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }
  if (selected == nullptr) {
    err << "usage error: no command given\n";
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string started = utc_now();
  std::uint64_t seed = selected->default_seed;
  std::string data;
  try {
    if (const char* env = std::getenv("PERMUTON_LAB_SEED"); env != nullptr && *env != '\0') {
      std::size_t used = 0;
      try {
        seed = std::stoull(env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != std::string(env).size()) throw PreconditionError("PERMUTON_LAB_SEED must be an unsigned integer");
    }
    if (seed_flag) seed = *seed_flag;
    data = selected->body(a, seed, threads);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << " (estimate " << fmt_double(e.estimate()) << ", error "
        << fmt_double(e.error()) << ")\n";
    return kValidation;
  } catch (const std::system_error& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  try {
    if (out_path.empty())
      out << data;
    else
      write_file_atomic(out_path, data);
    if (!manifest_path.empty()) {
      nlohmann::json m;
      m["command"] = selected_path;
      m["args"] = args;
      m["seed"] = seed;
      m["threads"] = threads;
      m["output"] = out_path.empty() ? "stdout" : out_path;
      m["versions"] = {{"permlab", PERMLAB_VERSION},
                       {"boost", BOOST_LIB_VERSION},
                       {"compiler", __VERSION__},
                       {"cli11", CLI11_VERSION}};
      m["started_utc"] = started;
      m["wall_time_seconds"] = wall;
      write_file_atomic(manifest_path, m.dump(2) + "\n");
    }
  } catch (const std::system_error& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}

}  // namespace permlab::cli
