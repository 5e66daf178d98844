#include "qmac/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmac/alcove.hpp"
#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"
#include "qmac/io.hpp"
#include "qmac/ospath.hpp"
#include "qmac/qls.hpp"

namespace qmac::cli {

namespace {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string type = "A1";
  std::vector<std::int64_t> lambda;
  std::string w = "e";
  std::string model = "qls";
  std::string format;
  bool all_w = false;
  std::string out_file;
  std::string tiebreak;
  std::string what;
};

void add_common(CLI::App* sub, JobSpec& spec) {
  sub->add_option("type,--type", spec.type, "Cartan type, e.g. A2 (default A1)");
  sub->add_option("--lambda", spec.lambda, "Dominant weight in fundamental weights (default rho)")
      ->delimiter(',');
  sub->add_option("--format", spec.format, "text|json|latex|dot");
  sub->add_option("--out", spec.out_file, "Write output to FILE");
  sub->add_option("--chain-tiebreak", spec.tiebreak,
                  "Reduced word for w0 fixing the reflection order of the lex chain");
}

struct Job {
  RootDatum datum;
  Weight lambda;
  IndexSet J;
  std::optional<ReflectionOrder> order;
};

Job make_job(const JobSpec& spec) {
  RootDatum datum(CartanType::parse(spec.type));
  Weight lambda = datum.rho();
  if (!spec.lambda.empty()) {
    if (static_cast<int>(spec.lambda.size()) != datum.rank())
      throw ValidationError("--lambda needs " + std::to_string(datum.rank()) + " coordinates for " +
                            datum.type().name());
    lambda = to_weight(spec.lambda);
    if (!is_dominant(lambda)) throw ValidationError("--lambda must have nonnegative coordinates");
  }
  std::optional<ReflectionOrder> order;
  if (!spec.tiebreak.empty()) order.emplace(datum, parse_letters(datum, spec.tiebreak));
  const IndexSet J = stabilizer(lambda);
  return Job{std::move(datum), std::move(lambda), J, std::move(order)};
}

// The requested w, or every element of W^J.
std::vector<WeylElt> targets(const Job& job, const JobSpec& spec, std::ostream& err) {
  if (spec.all_w) return enumerate_minimal_reps(job.datum, job.J);
  const WeylElt w = parse_word(job.datum, spec.w);
  const WeylElt rep = min_coset_rep(job.datum, w, job.J);
  if (!(rep == w))
    err << "note: w = " << word_string(w) << " replaced by its minimal coset representative "
        << word_string(rep) << "\n";
  return {rep};
}

// Lazily built models shared across all w of one job.
class Models {
 public:
  explicit Models(const Job& job) : job_(job) {}

  GradedChar compute(const std::string& model, const WeylElt& w) {
    if (model == "qls") return qls().gch(w);
    if (model == "alcove") return alcove().macdonald(w);
    if (model == "os") return os().macdonald(w);
    if (model == "demazure") return macdonald_recursive(job_.datum, w, job_.lambda);
    throw ValidationError("unknown model '" + model + "'");
  }

  const QLSModel& qls() {
    if (!qls_) qls_.emplace(job_.datum, job_.lambda);
    return *qls_;
  }
  const AlcoveModel& alcove() {
    if (!alcove_) {
      if (job_.order)
        alcove_.emplace(job_.datum, job_.lambda, *job_.order);
      else
        alcove_.emplace(job_.datum, job_.lambda);
    }
    return *alcove_;
  }
  const OSModel& os() {
    if (!os_) {
      if (job_.order)
        os_.emplace(job_.datum, job_.lambda, *job_.order);
      else
        os_.emplace(job_.datum, job_.lambda);
    }
    return *os_;
  }

 private:
  const Job& job_;
  std::optional<QLSModel> qls_;
  std::optional<AlcoveModel> alcove_;
  std::optional<OSModel> os_;
};

const std::vector<std::string> kModels{"qls", "alcove", "os", "demazure"};

std::string render(const GradedChar& f, const std::string& format) {
  if (format == "latex") return to_latex(f);
  return to_text(f);
}

void emit(const JobSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(spec.out_file, std::ios::binary);
  if (!file) throw IoError("cannot open '" + spec.out_file + "' for writing");
  file << text;
  if (!file.flush()) throw IoError("failed writing '" + spec.out_file + "'");
}

json weight_list(const std::vector<std::int64_t>& v) { return json(v); }

int cmd_compute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const std::string format = spec.format.empty() ? "text" : spec.format;
  if (format != "text" && format != "json" && format != "latex")
    throw ValidationError("compute supports --format text|json|latex");
  const Job job = make_job(spec);
  const std::vector<std::string> models =
      spec.model == "all" ? kModels : std::vector<std::string>{spec.model};
  Models cache(job);
  const std::vector<std::int64_t> lambda(job.lambda.data(), job.lambda.data() + job.lambda.size());

  std::ostringstream os;
  json records = json::array();
  const auto ws = targets(job, spec, err);
  for (const auto& w : ws) {
    for (const auto& model : models) {
      const GradedChar f = cache.compute(model, w);
      if (format == "json") {
        records.push_back({{"type", job.datum.type().name()},
                           {"lambda", weight_list(lambda)},
                           {"w", word_string(w)},
                           {"model", model},
                           {"terms", terms_json(f)}});
        continue;
      }
      if (ws.size() > 1) os << word_string(w) << ": ";
      if (models.size() > 1) os << model << ": ";
      os << render(f, format) << "\n";
    }
  }
  if (format == "json") os << (records.size() == 1 ? records[0] : records).dump(2) << "\n";
  emit(spec, os.str(), out);
  return kOk;
}

std::string first_difference(const GradedChar& a, const GradedChar& b) {
  const GradedChar diff = a - b;
  const auto& [m, c] = display_order(diff).front();
  GradedChar unit;
  unit.add(m, 1);
  const Weight wt = to_weight(m.wt);
  return to_text(unit) + ": " + std::to_string(a.coefficient(wt, m.q)) + " vs " +
         std::to_string(b.coefficient(wt, m.q));
}

int cmd_crosscheck(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const Job job = make_job(spec);
  Models cache(job);
  std::ostringstream os;
  int agree = 0, total = 0;
  bool mismatch = false;
  for (const auto& w : targets(job, spec, err)) {
    ++total;
    const GradedChar ref = cache.compute(kModels[0], w);
    std::string verdict = "agree";
    for (std::size_t k = 1; k < kModels.size(); ++k) {
      const GradedChar f = cache.compute(kModels[k], w);
      if (!(f == ref)) {
        verdict = "MISMATCH " + kModels[0] + " vs " + kModels[k] + " at " + first_difference(ref, f);
        break;
      }
    }
    if (verdict == "agree")
      ++agree;
    else
      mismatch = true;
    os << word_string(w) << ": " << verdict << "\n";
  }
  os << agree << "/" << total << " agree (" << kModels.size() << " models)\n";
  emit(spec, os.str(), out);
  return mismatch ? kMismatch : kOk;
}

int cmd_export(const JobSpec& spec, std::ostream& out, std::ostream&) {
  const Job job = make_job(spec);
  const std::string format = spec.format.empty() ? (spec.what == "qbg" ? "dot" : "json") : spec.format;
  if (format != "json" && !(format == "dot" && spec.what == "qbg"))
    throw ValidationError("export " + spec.what + " does not support --format " + format);
  Models cache(job);
  std::string text;
  if (spec.what == "qbg") {
    const QBGraph graph(job.datum, job.J);
    text = format == "dot" ? qbg_dot(graph) : qbg_json(graph).dump(2) + "\n";
  } else if (spec.what == "chain") {
    text = chain_json(job.datum, cache.alcove().chain()).dump(2) + "\n";
  } else if (spec.what == "qls") {
    json records = json::array();
    for (const auto& eta : cache.qls().paths()) records.push_back(path_json(cache.qls(), eta));
    text = records.dump(2) + "\n";
  } else if (spec.what == "admissible") {
    json records = json::array();
    for (const auto& A : cache.alcove().subsets()) records.push_back(admissible_json(cache.alcove(), A));
    text = records.dump(2) + "\n";
  } else {
    throw ValidationError("unknown export target '" + spec.what + "'");
  }
  emit(spec, text, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonsymmetric Macdonald polynomials at t = 0", "qmac"};
  app.require_subcommand(1);
  JobSpec spec;

  auto* compute = app.add_subcommand("compute", "Compute E_{w lambda}(x; q, 0)");
  add_common(compute, spec);
  compute->add_option("--w", spec.w, "Weyl group element, e.g. \"s1 s2\" (default e)");
  compute->add_option("--model", spec.model, "qls|alcove|os|demazure|all")
      ->check(CLI::IsMember({"qls", "alcove", "os", "demazure", "all"}));
  compute->add_flag("--all-w", spec.all_w, "Iterate over every minimal coset representative");

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare all four models");
  add_common(crosscheck, spec);
  crosscheck->add_option("--w", spec.w, "Weyl group element (default e)");
  crosscheck->add_flag("--all-w", spec.all_w, "Iterate over every minimal coset representative");

  auto* exporter = app.add_subcommand("export", "Dump graphs, chains and paths");
  exporter->add_option("what", spec.what, "qbg|chain|qls|admissible")
      ->required()
      ->check(CLI::IsMember({"qbg", "chain", "qls", "admissible"}));
  add_common(exporter, spec);

  std::vector<const char*> argv{"qmac"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(spec, out, err);
    if (crosscheck->parsed()) return cmd_crosscheck(spec, out, err);
    return cmd_export(spec, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantError;
  }
}

}  // namespace qmac::cli
