#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "satake_fold/io.hpp"

using namespace satake_fold;

namespace {

enum class Format { Table, Json };

std::string show(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

std::string show_word(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return s + "]";
}

std::string show_matrix(const IntMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index k = 0; k < m.cols(); ++k) s += (k ? "," : "") + std::to_string(m(i, k));
    s += "]";
  }
  return s + "]";
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_simply_laced(const RootSystem& rs) {
  if (!rs.is_simply_laced()) {
    throw UnsupportedBraid("MV computations need a simply-laced datum; this Cartan matrix has an edge of order >= 4");
  }
}

Word resolve_element_word(const WeylGroup& g, const std::string& text) {
  if (text == "w0") return g.word(g.longest());
  if (text == "e") return {};
  return parse_word(text, g.rank());
}

Word resolve_w0_word(const WeylGroup& g, const std::string& text) {
  if (text.empty()) return g.word(g.longest());
  Word w = parse_word(text, g.rank());
  if (!g.is_reduced(w) || g.evaluate(w) != g.longest()) {
    throw PreconditionError("word " + show_word(w) + " is not a reduced word of the longest element");
  }
  return w;
}

struct Options {
  std::string group;
  std::string sigma;
  std::string mu;
  std::string lambda;
  std::string nu;
  std::string word;
  std::string n;
  std::string element = "w0";
  std::string method = "freudenthal";
  std::string format = "table";
  Integer max_height = 4;
  unsigned threads = 0;
  bool count_only = false;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Table; }

int cmd_fold(const Options& o) {
  const RootDatum datum = load_group(o.group);
  const PinnedAut sigma = load_sigma(o.sigma, datum);
  const FoldedDatum fd = fold(datum, sigma);
  const WeylGroup g{RootSystem(datum)};
  const FoldedWeyl fw = folded_weyl(g, fd.orbits);
  if (format_of(o) == Format::Json) {
    emit(fold_to_json(datum, sigma, fd, fw));
    return 0;
  }
  std::cout << "folded Cartan: " << show_matrix(fd.datum.cartan()) << '\n';
  std::cout << "folded lattice rank: " << fd.datum.dim() << "  torsion:";
  if (fd.torsion.empty()) std::cout << " none";
  for (Integer t : fd.torsion) std::cout << ' ' << t;
  std::cout << '\n';
  for (Eigen::Index e = 0; e < fd.datum.rank(); ++e) {
    const auto se = static_cast<std::size_t>(e);
    std::cout << "eta" << e + 1 << ' ' << show_word(fd.orbits.orbits[se])
              << (fd.orbits.types[se] == OrbitType::Disconnected ? " disconnected" : " connected_pair")
              << "  root " << show(fd.datum.root(e)) << "  coroot " << show(fd.datum.coroot(e)) << " = "
              << show(fd.incl * fd.datum.coroot(e)) << " in X^v\n";
  }
  std::cout << "Coxeter matrix of W^sigma: " << show_matrix(fw.coxeter) << "  order " << fw.elements.size() << '\n';
  std::cout << "longest word of W^sigma: " << show_word(fw.longest_word) << '\n';
  std::cout << "rho_check: " << (rho_check(datum, sigma) ? "true" : "false") << '\n';
  return 0;
}

int cmd_orbits(const Options& o) {
  const RootDatum datum = load_group(o.group);
  const PinnedAut sigma = load_sigma(o.sigma, datum);
  const OrbitData od = orbit_analysis(datum, sigma);
  if (format_of(o) == Format::Json) {
    Json out = Json::array();
    for (std::size_t e = 0; e < od.orbits.size(); ++e) {
      out.push_back(Json{{"orbit", word_to_json(od.orbits[e])},
                         {"type", od.types[e] == OrbitType::Disconnected ? "disconnected" : "connected_pair"}});
    }
    emit(Json{{"orbits", out}});
    return 0;
  }
  for (std::size_t e = 0; e < od.orbits.size(); ++e) {
    std::cout << "eta" << e + 1 << ' ' << show_word(od.orbits[e]) << ' '
              << (od.types[e] == OrbitType::Disconnected ? "disconnected" : "connected_pair") << '\n';
  }
  return 0;
}

int cmd_weyl_words(const Options& o) {
  const WeylGroup g{RootSystem(load_group(o.group))};
  const int w = g.evaluate(resolve_element_word(g, o.element));
  if (o.count_only) {
    const std::size_t count = g.count_reduced_words(w);
    if (format_of(o) == Format::Json) {
      emit(Json{{"length", g.length(w)}, {"count", count}});
    } else {
      std::cout << count << '\n';
    }
    return 0;
  }
  const auto words = g.reduced_words(w, default_word_cap());
  if (format_of(o) == Format::Json) {
    Json list = Json::array();
    for (const auto& word : words) list.push_back(word_to_json(word));
    emit(Json{{"length", g.length(w)}, {"count", words.size()}, {"words", list}});
    return 0;
  }
  for (const auto& word : words) std::cout << show_word(word) << '\n';
  std::cout << words.size() << " reduced words of length " << g.length(w) << '\n';
  return 0;
}

void print_terms(const CharPoly& ch, const RootSystem& rs, Format f) {
  if (f == Format::Json) {
    Json j = to_json(ch, rs);
    j["dimension"] = ch.total();
    emit(j);
    return;
  }
  for (const auto& [x, m] : ch.sorted(rs)) std::cout << show(x) << "  " << m << '\n';
  std::cout << "dimension " << ch.total() << '\n';
}

int cmd_character(const Options& o) {
  const RootSystem rs(load_group(o.group));
  const Coweight mu = parse_vector(o.mu, rs.dim(), "--mu");
  if (!rs.is_dominant(mu)) throw PreconditionError("--mu " + show(mu) + " is not dominant");
  if (o.method == "mv") {
    require_simply_laced(rs);
    const WeylGroup g(rs);
    const MvCalculator mv(g);
    print_terms(mv_character(mv, mu, resolve_w0_word(g, o.word)), rs, format_of(o));
  } else {
    print_terms(character(rs, mu), rs, format_of(o));
  }
  return 0;
}

int cmd_kostant(const Options& o) {
  const WeylGroup g{RootSystem(load_group(o.group))};
  const MvCalculator mv(g);
  const Coweight nu = parse_vector(o.nu, g.system().dim(), "--nu");
  const Integer k = mv.kostant(nu);
  if (format_of(o) == Format::Json) {
    emit(Json{{"nu", to_json(nu)}, {"kostant", k}});
  } else {
    std::cout << k << '\n';
  }
  return 0;
}

// Data of coweight nu, or of coweight lambda - mu passing the polytope test.
std::vector<LusztigDatum> select_data(const Options& o, const MvCalculator& mv, const Word& word) {
  const RootSystem& rs = mv.system();
  if (!o.nu.empty()) return mv.enumerate_data(word, parse_vector(o.nu, rs.dim(), "--nu"));
  if (o.mu.empty() || o.lambda.empty()) throw PreconditionError("give either --nu or both --mu and --lambda");
  const Coweight mu = parse_vector(o.mu, rs.dim(), "--mu");
  const Coweight lambda = parse_vector(o.lambda, rs.dim(), "--lambda");
  if (!rs.is_dominant(mu)) throw PreconditionError("--mu " + show(mu) + " is not dominant");
  require_simply_laced(rs);
  std::vector<LusztigDatum> out;
  if (!rs.dominance_le(rs.dominant_representative(lambda), mu, ConeMode::Integer)) return out;
  for (auto& d : mv.enumerate_data(word, lambda - mu)) {
    if (mv.is_mv(d, mu)) out.push_back(std::move(d));
  }
  return out;
}

int cmd_mv_count(const Options& o) {
  const WeylGroup g{RootSystem(load_group(o.group))};
  const MvCalculator mv(g);
  const auto data = select_data(o, mv, resolve_w0_word(g, o.word));
  if (format_of(o) == Format::Json) {
    emit(Json{{"count", data.size()}});
  } else {
    std::cout << data.size() << '\n';
  }
  return 0;
}

int cmd_mv_list(const Options& o) {
  const WeylGroup g{RootSystem(load_group(o.group))};
  const MvCalculator mv(g);
  const Word word = resolve_w0_word(g, o.word);
  const auto data = select_data(o, mv, word);
  if (format_of(o) == Format::Json) {
    Json list = Json::array();
    for (const auto& d : data) list.push_back(d.n);
    emit(Json{{"word", word_to_json(word)}, {"count", data.size()}, {"data", list}});
    return 0;
  }
  std::cout << "word " << show_word(word) << '\n';
  for (const auto& d : data) {
    std::cout << '(';
    for (std::size_t k = 0; k < d.n.size(); ++k) std::cout << (k ? "," : "") << d.n[k];
    std::cout << ")\n";
  }
  std::cout << data.size() << " data\n";
  return 0;
}

int cmd_mv_ggms(const Options& o) {
  const WeylGroup g{RootSystem(load_group(o.group))};
  require_simply_laced(g.system());
  const MvCalculator mv(g);
  const Word word = resolve_w0_word(g, o.word);
  const IntVector n = parse_vector(o.n, static_cast<Eigen::Index>(word.size()), "--n");
  for (Eigen::Index k = 0; k < n.size(); ++k) {
    if (n(k) < 0) throw PreconditionError("--n entries must be nonnegative");
  }
  const LusztigDatum datum{word, to_std(n)};
  const GGMSDatum ggms = mv.ggms(datum);
  if (format_of(o) == Format::Json) {
    Json vertices = Json::array();
    for (std::size_t w = 0; w < g.size(); ++w) {
      vertices.push_back(Json{{"w", word_to_json(g.word(static_cast<int>(w)))}, {"nu", to_json(ggms.vertices[w])}});
    }
    emit(Json{{"word", word_to_json(word)}, {"n", datum.n}, {"coweight", to_json(mv.coweight(datum))},
              {"vertices", vertices}});
    return 0;
  }
  for (std::size_t w = 0; w < g.size(); ++w) {
    std::cout << std::left << std::setw(3 * static_cast<int>(g.length(g.longest())) + 4)
              << show_word(g.word(static_cast<int>(w))) << show(ggms.vertices[w]) << '\n';
  }
  return 0;
}

int cmd_twining(const Options& o) {
  const RootDatum datum = load_group(o.group);
  const TwiningContext ctx(datum, load_sigma(o.sigma, datum));
  require_simply_laced(ctx.system());
  const Coweight mu = parse_vector(o.mu, datum.dim(), "--mu");
  const CharPoly ch = ctx.twining_character(mu);
  const auto& fd = ctx.folded();
  if (format_of(o) == Format::Json) {
    Json terms = Json::array();
    for (const auto& [x, m] : ch.sorted(ctx.system())) {
      const Coweight f = project_coweight(fd, ctx.sigma(), x);
      terms.push_back(Json{{"coweight", to_json(x)}, {"folded", to_json(f)},
                           {"folded_in_X_vee", to_json(IntVector(fd.incl * f))}, {"trace", m}});
    }
    emit(Json{{"mu", to_json(mu)}, {"terms", terms}, {"trace_total", ch.total()}});
    return 0;
  }
  for (const auto& [x, m] : ch.sorted(ctx.system())) {
    std::cout << show(x) << "  folded " << show(project_coweight(fd, ctx.sigma(), x)) << "  " << m << '\n';
  }
  std::cout << "trace total " << ch.total() << '\n';
  return 0;
}

Json report_json(const TwiningReport& r, const TwiningContext& ctx) {
  Json j = to_json(r, ctx);
  j["folded_mu_in_X_vee"] = to_json(IntVector(ctx.folded().incl * r.folded_mu));
  return j;
}

void print_report(const TwiningReport& r, const TwiningContext& ctx) {
  std::cout << "mu " << show(r.mu) << "  folded " << show(r.folded_mu) << "  dimension " << r.dimension << '\n';
  std::cout << "  lambda              folded          trace  mult  result\n";
  for (const auto& row : r.rows) {
    std::cout << "  " << std::left << std::setw(20) << show(row.lambda) << std::setw(16)
              << show(project_coweight(ctx.folded(), ctx.sigma(), row.lambda)) << std::right << std::setw(5)
              << row.lhs_trace << std::setw(6) << row.rhs_mult << "  " << (row.pass ? "pass" : "FAIL") << '\n';
  }
  if (!r.non_invariant.empty()) {
    std::cout << "  non-invariant orbits (trace 0):\n";
    for (const auto& orbit : r.non_invariant) {
      std::cout << "   ";
      for (const auto& x : orbit.orbit) std::cout << ' ' << show(x);
      std::cout << "  mult " << orbit.mult << '\n';
    }
  }
  std::cout << "overall " << (r.overall ? "pass" : "FAIL") << '\n';
}

int cmd_verify(const Options& o) {
  const RootDatum datum = load_group(o.group);
  const TwiningContext ctx(datum, load_sigma(o.sigma, datum));
  require_simply_laced(ctx.system());
  const Coweight mu = parse_vector(o.mu, datum.dim(), "--mu");
  const TwiningReport r = ctx.verify(mu);
  if (format_of(o) == Format::Json) {
    emit(report_json(r, ctx));
  } else {
    print_report(r, ctx);
  }
  return r.overall ? 0 : 1;
}

int cmd_sweep(const Options& o) {
  if (o.max_height < 0) throw PreconditionError("--max-height must be nonnegative");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (o.group.empty() != o.sigma.empty()) throw PreconditionError("--group and --sigma go together");
  if (o.group.empty()) {
    pairs = builtin_pairs();
  } else {
    pairs.emplace_back(o.group, o.sigma);
  }
  const unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  bool overall = true;
  Json out_pairs = Json::array();
  for (const auto& [group, sigma_name] : pairs) {
    const RootDatum datum = load_group(group);
    const TwiningContext ctx(datum, load_sigma(sigma_name, datum));
    require_simply_laced(ctx.system());
    const auto mus = ctx.invariant_dominant_weights(o.max_height);
    std::vector<TwiningReport> reports(mus.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t k = next++; k < mus.size(); k = next++) {
        try {
          reports[k] = ctx.verify(mus[k]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    bool pair_pass = true;
    Json list = Json::array();
    for (const auto& r : reports) {
      pair_pass = pair_pass && r.overall;
      list.push_back(report_json(r, ctx));
    }
    overall = overall && pair_pass;
    if (format_of(o) == Format::Json) {
      out_pairs.push_back(Json{{"group", group}, {"sigma", sigma_name}, {"count", reports.size()},
                               {"pass", pair_pass}, {"reports", list}});
    } else {
      std::size_t failed = 0;
      for (const auto& r : reports) failed += r.overall ? 0 : 1;
      std::cout << group << " / " << sigma_name << ": " << reports.size() << " weights, " << failed << " failures\n";
      for (const auto& r : reports) {
        std::cout << "  mu " << std::left << std::setw(16) << show(r.mu) << " dim " << std::setw(6) << r.dimension
                  << ' ' << (r.overall ? "pass" : "FAIL") << '\n';
      }
    }
  }
  if (format_of(o) == Format::Json) {
    emit(Json{{"max_height", o.max_height}, {"pairs", out_pairs}, {"overall", overall}});
  } else {
    std::cout << "overall " << (overall ? "pass" : "FAIL") << '\n';
  }
  return overall ? 0 : 1;
}

int report_error(const char* kind, const std::exception& e, int code) {
  std::cerr << "error[" << kind << "]: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folded root data, twining characters and MV-polytope multiplicities"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  const auto formats = CLI::IsMember({"table", "json"});
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "built-in group name or JSON file")->required();
  };
  auto add_sigma = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "built-in automorphism name or JSON file")->required();
  };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "table or json")->check(formats); };
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
  };

  auto* fold_cmd = app.add_subcommand("fold", "fold a root datum along a pinned automorphism");
  add_group(fold_cmd);
  add_sigma(fold_cmd);
  add_format(fold_cmd);
  bind(fold_cmd, cmd_fold);

  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of the automorphism on the simple roots");
  add_group(orbits_cmd);
  add_sigma(orbits_cmd);
  add_format(orbits_cmd);
  bind(orbits_cmd, cmd_orbits);

  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group queries");
  weyl_cmd->require_subcommand(1);
  auto* words_cmd = weyl_cmd->add_subcommand("words", "reduced words of an element");
  add_group(words_cmd);
  words_cmd->add_option("--element", o.element, "w0, e, or a word such as 1,2,1");
  words_cmd->add_flag("--count", o.count_only, "print only the number of reduced words");
  add_format(words_cmd);
  bind(words_cmd, cmd_weyl_words);

  auto* char_cmd = app.add_subcommand("character", "weight multiplicities of an irreducible module");
  add_group(char_cmd);
  char_cmd->add_option("--mu", o.mu, "dominant highest weight")->required();
  char_cmd->add_option("--method", o.method, "freudenthal or mv")->check(CLI::IsMember({"freudenthal", "mv"}));
  char_cmd->add_option("--word", o.word, "reduced word of w0 for --method mv");
  add_format(char_cmd);
  bind(char_cmd, cmd_character);

  auto* mv_cmd = app.add_subcommand("mv", "Lusztig data and MV polytopes");
  mv_cmd->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"count", "number of data", cmd_mv_count},
                                std::tuple{"list", "list the data", cmd_mv_list}}) {
    auto* sub = mv_cmd->add_subcommand(name, help);
    add_group(sub);
    sub->add_option("--nu", o.nu, "coweight of the data (all data)");
    sub->add_option("--mu", o.mu, "dominant coweight (MV data of B(mu) only)");
    sub->add_option("--lambda", o.lambda, "weight of B(mu), with --mu");
    sub->add_option("--word", o.word, "reduced word of w0");
    add_format(sub);
    bind(sub, fn);
  }
  auto* ggms_cmd = mv_cmd->add_subcommand("ggms", "vertices of the polytope of a Lusztig datum");
  add_group(ggms_cmd);
  ggms_cmd->add_option("--n", o.n, "Lusztig datum")->required();
  ggms_cmd->add_option("--word", o.word, "reduced word of w0");
  add_format(ggms_cmd);
  bind(ggms_cmd, cmd_mv_ggms);

  auto* kostant_cmd = app.add_subcommand("kostant", "Kostant partition function");
  add_group(kostant_cmd);
  kostant_cmd->add_option("--nu", o.nu, "coweight")->required();
  add_format(kostant_cmd);
  bind(kostant_cmd, cmd_kostant);

  auto* twining_cmd = app.add_subcommand("twining", "twining character by sigma-invariant MV data");
  add_group(twining_cmd);
  add_sigma(twining_cmd);
  twining_cmd->add_option("--mu", o.mu, "sigma-invariant dominant coweight")->required();
  add_format(twining_cmd);
  bind(twining_cmd, cmd_twining);

  auto* verify_cmd = app.add_subcommand("verify", "compare twining trace and folded multiplicity");
  add_group(verify_cmd);
  add_sigma(verify_cmd);
  verify_cmd->add_option("--mu", o.mu, "sigma-invariant dominant coweight")->required();
  add_format(verify_cmd);
  bind(verify_cmd, cmd_verify);

  auto* sweep_cmd = app.add_subcommand("sweep", "verify every sigma-invariant dominant mu up to a height bound");
  sweep_cmd->add_option("--max-height", o.max_height, "bound on <rho, mu>")->capture_default_str();
  sweep_cmd->add_option("--group", o.group, "restrict to one group (with --sigma)");
  sweep_cmd->add_option("--sigma", o.sigma, "restrict to one automorphism (with --group)");
  sweep_cmd->add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  add_format(sweep_cmd);
  bind(sweep_cmd, cmd_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    return report_error("parse", e, 2);
  } catch (const InvalidDatum& e) {
    return report_error("invalid-datum", e, 2);
  } catch (const InvalidAutomorphism& e) {
    return report_error("invalid-automorphism", e, 2);
  } catch (const UnsupportedOrbit& e) {
    return report_error("unsupported-orbit", e, 2);
  } catch (const UnsupportedBraid& e) {
    return report_error("not-simply-laced", e, 2);
  } catch (const PreconditionError& e) {
    return report_error("precondition", e, 2);
  } catch (const SizeGuardExceeded& e) {
    return report_error("size-guard", e, 2);
  } catch (const EnumerationDiverged& e) {
    return report_error("diverged", e, 2);
  } catch (const InternalConsistencyError& e) {
    return report_error("internal", e, 1);
  } catch (const std::exception& e) {
    return report_error("internal", e, 1);
  }
}
