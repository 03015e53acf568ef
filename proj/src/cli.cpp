#include "twistspin/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistspin/alexander.hpp"
#include "twistspin/degree.hpp"
#include "twistspin/error.hpp"
#include "twistspin/floer.hpp"
#include "twistspin/knots.hpp"

namespace twistspin {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string braid;
  std::string presentation;
  std::vector<std::int64_t> torus;
  std::vector<std::int64_t> brieskorn;
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool m_given = false;
  bool n_given = false;
  std::string format = "text";
  bool dump = false;
  std::int64_t r_max = 25;
  bool include_trivial = false;
  std::string family = "brieskorn_23";
};

enum class Source { Braid, Presentation, Torus, Brieskorn };

Source single_source(const Options& o, std::initializer_list<Source> allowed,
                     const std::string& verb) {
  std::vector<Source> given;
  if (!o.braid.empty()) given.push_back(Source::Braid);
  if (!o.presentation.empty()) given.push_back(Source::Presentation);
  if (!o.torus.empty()) given.push_back(Source::Torus);
  if (!o.brieskorn.empty()) given.push_back(Source::Brieskorn);
  if (given.size() != 1)
    throw UsageError(verb + ": give exactly one of --braid, --presentation, --torus, --brieskorn");
  if (std::find(allowed.begin(), allowed.end(), given.front()) == allowed.end())
    throw UsageError(verb + ": unsupported input source for this verb");
  return given.front();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int to_int(std::int64_t v, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw DomainError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

struct Knot {
  GroupPresentation presentation;
  std::string label;
};

// Knot inputs for alex and spin. Torus knots go through their braid when a
// longitude is needed, since <u, v | u^p v^-q> carries none.
Knot load_knot(const Options& o, Source src, bool need_longitude) {
  switch (src) {
    case Source::Braid:
      return {braid_to_presentation(parse_braid(o.braid)), "braid " + o.braid};
    case Source::Presentation:
      return {parse_presentation(read_file(o.presentation)), "presentation " + o.presentation};
    case Source::Torus: {
      const int p = to_int(o.torus[0], "p"), q = to_int(o.torus[1], "q");
      const std::string label = "torus T(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (need_longitude) {
        if (std::gcd(p, q) != 1 || p < 2 || q < 2)
          throw DomainError("torus knot needs coprime p, q >= 2");
        return {braid_to_presentation(torus_knot_braid(p, q)), label};
      }
      return {torus_knot(p, q).presentation, label};
    }
    case Source::Brieskorn:
      break;
  }
  throw UsageError("not a knot input");
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_alex(const Options& o, std::ostream& out) {
  const Source src = single_source(o, {Source::Braid, Source::Presentation, Source::Torus}, "alex");
  const Knot knot = load_knot(o, src, false);
  const AlexanderMatrix mat = alexander_matrix(knot.presentation);
  const IdealGenerator ideal = first_elementary_ideal(mat);
  std::optional<bool> oracle;
  if (src == Source::Torus) {
    const auto tk = torus_knot(to_int(o.torus[0], "p"), to_int(o.torus[1], "q"));
    oracle = equal_up_to_units(tk.alexander.to_rational(), ideal.generator);
  }
  if (o.format == "json") {
    json j = {{"invariant", "alexander"},
              {"input", knot.label},
              {"generators", knot.presentation.generator_count()},
              {"relators", knot.presentation.relators().size()},
              {"delta", ideal.generator.to_string()},
              {"unit_ideal", ideal.is_unit()},
              {"note", ideal.note}};
    if (oracle) j["closed_form_agrees"] = *oracle;
    print_json(out, j);
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"input", knot.label},
        {"generators", std::to_string(knot.presentation.generator_count())},
        {"relators", std::to_string(knot.presentation.relators().size())},
        {"Delta", ideal.generator.to_string()},
        {"note", ideal.note}};
    if (oracle) rows.emplace_back("closed form", *oracle ? "agrees" : "DISAGREES");
    print_rows(out, rows);
  }
  return 0;
}

int cmd_spin(const Options& o, std::ostream& out) {
  const Source src = single_source(o, {Source::Braid, Source::Presentation, Source::Torus}, "spin");
  const Knot knot = load_knot(o, src, true);
  const InclusionReport inc = ideal_inclusion_report(knot.presentation, o.m, o.n);

  std::string verdict;
  std::optional<bool> qhb;
  std::optional<bool> roll_obstructed;
  if (o.m != 0) {
    qhb = bounds_rational_homology_ball(inc.knot_delta, o.m);
    verdict = *qhb ? "fiber is a rational homology ball" : "fiber is NOT a rational homology ball";
  } else {
    roll_obstructed = !is_unit_rational(inc.knot_delta);
    verdict = *roll_obstructed
                  ? "roll-spin Alexander ideal is proper: bounds no rational homology ball"
                  : "roll-spin Alexander ideal is the unit ideal: inconclusive";
  }
  if (o.format == "json") {
    json j = {{"invariant", "spin"},
              {"input", knot.label},
              {"m", o.m},
              {"n", o.n},
              {"knot_delta", inc.knot_delta.to_string()},
              {"base_gcd", inc.base_gcd.to_string()},
              {"spin_generator", inc.spin_generator.to_string()},
              {"inclusion_holds", inc.holds},
              {"verdict", verdict}};
    j["rational_homology_ball"] = qhb ? json(*qhb) : json(nullptr);
    j["roll_spin_obstructed"] = roll_obstructed ? json(*roll_obstructed) : json(nullptr);
    print_json(out, j);
  } else {
    print_rows(out, {{"input", knot.label},
                     {"m, n", std::to_string(o.m) + ", " + std::to_string(o.n)},
                     {"Delta(K)", inc.knot_delta.to_string()},
                     {"(Delta_K, T^m - 1)", inc.base_gcd.to_string()},
                     {"Delta(spin)", inc.spin_generator.to_string()},
                     {"ideal inclusion", inc.holds ? "holds" : "FAILS"},
                     {"verdict", verdict}});
  }
  return 0;
}

json report_json(const DegreeReport& d) {
  return {{"invariant", "deg"},
          {"value", d.value},
          {"method", to_string(d.method)},
          {"inputs", d.inputs},
          {"obstruction", to_string(lspace_obstruction(d))},
          {"warnings", d.warnings}};
}

int cmd_deg(const Options& o, std::ostream& out) {
  const Source src = single_source(o, {Source::Brieskorn, Source::Torus}, "deg");
  DegreeReport report;
  if (src == Source::Brieskorn) {
    report = deg_brieskorn(o.brieskorn[0], o.brieskorn[1], o.brieskorn[2]);
  } else {
    report = deg_torus_knot(o.torus[0], o.torus[1]);
  }
  if (o.m_given || o.n_given) report = deg_twist_roll_spin(report, o.m, o.n);
  if (o.format == "json") {
    print_json(out, report_json(report));
    return 0;
  }
  std::ostringstream inputs;
  for (auto it = report.inputs.begin(); it != report.inputs.end(); ++it)
    inputs << (it == report.inputs.begin() ? "" : " ") << it->first << "=" << it->second;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"|deg|", std::to_string(report.value)},
      {"method", to_string(report.method)},
      {"inputs", inputs.str()},
      {"L-space", to_string(lspace_obstruction(report))}};
  if (!report.rationale.empty()) rows.emplace_back("rationale", report.rationale);
  for (const auto& w : report.warnings) rows.emplace_back("warning", w);
  print_rows(out, rows);
  return 0;
}

json summary_json(const FloerSummary& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks)
    blocks.push_back({{"level", b.level},
                      {"grading", b.grading},
                      {"vertices", b.vertex_count},
                      {"rank", b.rank},
                      {"parity", to_string(b.parity)},
                      {"anti_invariant_dim", b.anti_invariant_dim},
                      {"trace", b.trace}});
  return {{"total_rank", s.total_rank},
          {"z2_grading", to_string(s.z2_grading)},
          {"anti_invariant_euler", s.anti_invariant_euler},
          {"blocks", blocks}};
}

int cmd_gradedroot(const Options& o, std::ostream& out) {
  single_source(o, {Source::Brieskorn}, "gradedroot");
  const auto& t = o.brieskorn;
  const BrieskornFloer floer = brieskorn_floer(t[0], t[1], t[2]);
  const auto& root = floer.root;
  if (o.dump || o.format == "json") {
    json j = {{"invariant", "gradedroot"},
              {"inputs", {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}}},
              {"summary", summary_json(floer.summary)},
              {"leaves", root.leaves().size()},
              {"involution_is_automorphism", root.involution_is_automorphism()},
              {"warnings", floer.warnings}};
    if (o.dump) {
      json vertices = json::array();
      for (const auto& v : root.vertices())
        vertices.push_back({{"id", v.id},
                            {"grading", v.grading},
                            {"parent", v.parent ? json(*v.parent) : json(nullptr)},
                            {"involution_image", v.involution_image}});
      j["vertices"] = vertices;
    }
    print_json(out, j);
    return 0;
  }
  const auto& s = floer.summary;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"Sigma", "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + ")"},
      {"vertices", std::to_string(root.vertices().size())},
      {"leaves", std::to_string(root.leaves().size())},
      {"reduced rank", std::to_string(s.total_rank)},
      {"Z/2 grading", to_string(s.z2_grading)},
      {"chi anti-invariant", std::to_string(s.anti_invariant_euler)},
      {"involution ok", yes_no(root.involution_is_automorphism())}};
  for (const auto& w : floer.warnings) rows.emplace_back("warning", w);
  print_rows(out, rows);
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.family != "brieskorn_23") throw UsageError("sweep: unknown family '" + o.family + "'");
  if (!o.braid.empty() || !o.presentation.empty() || !o.torus.empty() || !o.brieskorn.empty())
    throw UsageError("sweep takes no input source");
  const auto rows = sweep_brieskorn_23(o.r_max, o.include_trivial, thread_cap_from_env());
  const bool all_agree = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.agree; });
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"r", r.r},
                     {"k", r.k},
                     {"rank", r.rank},
                     {"chi", r.chi},
                     {"deg_montesinos", r.deg_montesinos},
                     {"deg_closed_form", r.deg_closed_form},
                     {"agree", r.agree}});
    print_json(out, {{"family", o.family},
                     {"r_max", o.r_max},
                     {"include_trivial", o.include_trivial},
                     {"rows", arr},
                     {"all_agree", all_agree}});
    return 0;
  }
  out << std::right << std::setw(5) << "r" << std::setw(4) << "k" << std::setw(6) << "rank"
      << std::setw(6) << "chi" << std::setw(8) << "|deg|" << std::setw(8) << "closed"
      << std::setw(7) << "agree" << '\n';
  for (const auto& r : rows)
    out << std::setw(5) << r.r << std::setw(4) << r.k << std::setw(6) << r.rank << std::setw(6)
        << r.chi << std::setw(8) << r.deg_montesinos << std::setw(8) << r.deg_closed_form
        << std::setw(7) << yes_no(r.agree) << '\n';
  out << rows.size() << " rows, " << (all_agree ? "all agree" : "DISAGREEMENT") << '\n';
  return 0;
}

int cmd_selftest(std::ostream& out) {
  bool ok = true;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out << (pass ? "PASS " : "FAIL ") << name;
    if (!pass && !detail.empty()) out << ": " << detail;
    out << '\n';
    ok = ok && pass;
  };

  // Calibration gate: reduced ranks of Sigma(2,3,r) against 2k / 2k-1.
  std::string bad;
  for (std::int64_t r = 5; r <= 97; ++r) {
    if (std::gcd(r, std::int64_t{6}) != 1) continue;
    const auto s = brieskorn_floer(2, 3, r).summary;
    const std::int64_t res = r % 12;
    const std::int64_t expected = (res == 1 || res == 5) ? 2 * (r / 12) : 2 * ((r + 5) / 12) - 1;
    if (s.total_rank != expected) bad += " r=" + std::to_string(r);
  }
  check("tau calibration: Sigma(2,3,r) ranks for 5 <= r <= 97", bad.empty(), bad);

  const auto rows = sweep_brieskorn_23(97, false, thread_cap_from_env());
  bad.clear();
  for (const auto& r : rows)
    if (!r.agree) bad += " r=" + std::to_string(r.r);
  check("graded-root degree equals closed form for 5 <= r <= 97", bad.empty(), bad);

  bad.clear();
  for (std::int64_t p = 3; p <= 11; p += 2)
    for (std::int64_t q = p + 2; q <= 11; q += 2)
      if (std::gcd(p, q) == 1 && deg_torus_knot(p, q).value != 1)
        bad += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
  check("torus knot degrees are 1", bad.empty(), bad);

  bad.clear();
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto tk = torus_knot(p, q);
      if (!equal_up_to_units(first_elementary_ideal(alexander_matrix(tk.presentation)).generator,
                             tk.alexander.to_rational()))
        bad += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
  check("torus knot Alexander polynomials match the closed form", bad.empty(), bad);

  bad.clear();
  const auto trefoil = braid_to_presentation(parse_braid("B2: s1^3"));
  const auto delta = first_elementary_ideal(alexander_matrix(trefoil)).generator;
  for (std::int64_t m = 1; m <= 12; ++m)
    if (bounds_rational_homology_ball(delta, m) != (m % 6 != 0)) bad += " m=" + std::to_string(m);
  check("trefoil rational homology ball criterion", bad.empty(), bad);

  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<SweepRow> sweep_brieskorn_23(std::int64_t r_max, bool include_trivial,
                                         unsigned threads) {
  std::vector<std::int64_t> rs;
  for (std::int64_t r = include_trivial ? 1 : 5; r <= r_max; ++r)
    if (std::gcd(r, std::int64_t{6}) == 1) rs.push_back(r);
  std::vector<SweepRow> rows(rs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rs.size(); i = next++) {
      try {
        const std::int64_t r = rs[i];
        const auto floer = brieskorn_floer(2, 3, r);
        SweepRow row;
        row.r = r;
        row.k = (r % 12 == 1 || r % 12 == 5) ? r / 12 : (r + 5) / 12;
        row.rank = floer.summary.total_rank;
        row.chi = floer.summary.anti_invariant_euler;
        row.deg_montesinos = deg_montesinos_mapping_torus(floer.summary).value;
        row.deg_closed_form = deg_brieskorn_closed_form(r).value;
        row.agree = row.deg_montesinos == row.deg_closed_form;
        rows[i] = row;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

unsigned thread_cap_from_env() {
  const char* env = std::getenv("TWISTSPIN_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024)
    throw UsageError("TWISTSPIN_THREADS must be an integer in [1, 1024]");
  return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander ideals and |deg| of twist-roll-spun knots", "twistspin"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_knot_inputs = [&](CLI::App* sub) {
    sub->add_option("--braid", o.braid, "Braid word, e.g. 'B3: s1 s2^-1 s1 s2^-1'");
    sub->add_option("--presentation", o.presentation, "Presentation file");
    sub->add_option("--torus", o.torus, "Torus knot T(p,q)")->expected(2);
  };
  auto add_twist = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Twist count");
    sub->add_option("--n", o.n, "Roll count");
  };

  auto* alex = app.add_subcommand("alex", "Alexander polynomial of a knot");
  add_knot_inputs(alex);
  add_format(alex);

  auto* spin = app.add_subcommand("spin", "Alexander ideal of a twist-roll-spun knot");
  add_knot_inputs(spin);
  add_twist(spin);
  add_format(spin);

  auto* deg = app.add_subcommand("deg", "|deg| of a Brieskorn or torus-knot twist-spin");
  deg->add_option("--brieskorn", o.brieskorn, "Brieskorn triple p q r")->expected(3);
  deg->add_option("--torus", o.torus, "Odd coprime p q")->expected(2);
  add_twist(deg);
  add_format(deg);

  auto* root = app.add_subcommand("gradedroot", "Graded root of a Brieskorn sphere");
  root->add_option("--brieskorn", o.brieskorn, "Brieskorn triple p q r")->expected(3)->required();
  root->add_flag("--dump", o.dump, "Emit the vertex list as JSON");
  add_format(root);

  auto* sweep = app.add_subcommand("sweep", "Degree table over a family");
  sweep->add_option("--family", o.family, "Family")->check(CLI::IsMember({"brieskorn_23"}));
  sweep->add_option("--r-max", o.r_max, "Largest r");
  sweep->add_flag("--include-trivial", o.include_trivial, "Include r = 1");
  add_format(sweep);

  auto* selftest = app.add_subcommand("selftest", "Run the calibration and consistency checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : {spin, deg}) {
    o.m_given = o.m_given || sub->count("--m") > 0;
    o.n_given = o.n_given || sub->count("--n") > 0;
  }

  try {
    if (alex->parsed()) return cmd_alex(o, out);
    if (spin->parsed()) return cmd_spin(o, out);
    if (deg->parsed()) return cmd_deg(o, out);
    if (root->parsed()) return cmd_gradedroot(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace twistspin
