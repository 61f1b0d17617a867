#pragma once

// Command-line front end. run() executes one subcommand and returns the
// process exit code: 0 success or pass, 1 check failure, 2 usage or parse
// error.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordcalc/ordcalc.hpp"

namespace ordcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Config {
  int m = 3;
  int n = 2;
  std::string alphabet = "auto";
  std::string order = "D";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool timing = false;
  std::size_t max_ball = kDefaultBallLimit;
  long max_len = 100000;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Report command_report(std::string name, const GroupParams& params, const Config& cfg, json config) {
  Report r;
  r.check = std::move(name);
  r.m = params.m();
  r.n = params.n();
  r.seed = cfg.seed;
  r.config = std::move(config);
  r.items = 1;
  return r;
}

inline Alphabet word_alphabet(const Config& cfg, std::string_view text) {
  if (cfg.alphabet == "auto") return detect_alphabet(text);
  auto a = parse_alphabet_name(cfg.alphabet);
  if (!a) throw UsageError("unknown alphabet '" + cfg.alphabet + "' (expected xy, s, a or auto)");
  return *a;
}

inline Word read_word(const Config& cfg, const std::string& text) {
  Word w = parse_word(text, word_alphabet(cfg, text));
  if (w.length() > cfg.max_len)
    throw UsageError("word length " + std::to_string(w.length()) + " exceeds --max-len " +
                     std::to_string(cfg.max_len));
  return w;
}

inline std::optional<Alphabet> fixed_alphabet(const Config& cfg) {
  if (cfg.alphabet == "auto") return std::nullopt;
  auto a = parse_alphabet_name(cfg.alphabet);
  if (!a) throw UsageError("unknown alphabet '" + cfg.alphabet + "' (expected xy, s, a or auto)");
  return a;
}

inline std::string sign_word(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
  }
  return "?";
}

inline int exit_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return kExitFailure;
  return kExitOk;
}

inline void print_reports(const std::vector<Report>& reports, const Config& cfg, std::ostream& out) {
  if (cfg.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(cfg.timing));
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << r.check << " (" << r.m << "," << r.n << ") " << verdict_name(r.verdict);
    if (r.config.contains("spec")) out << " [" << r.config["spec"].get<std::string>() << "]";
    if (cfg.timing) out << " " << r.millis << "ms";
    out << "\n";
    for (const auto& w : r.witnesses) out << "  witness: " << w.dump() << "\n";
  }
}

}  // namespace detail

/// Parses `args` (without the program name) and runs the selected
/// subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orderings of G_{m,n} = <x, y | x^m = y^n>", "ordcalc"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Config cfg;
  app.add_option("--m", cfg.m, "first exponent m (m >= n >= 2)")->capture_default_str();
  app.add_option("--n", cfg.n, "second exponent n")->capture_default_str();
  app.add_option("--alphabet", cfg.alphabet, "word alphabet: xy, s, a or auto")->capture_default_str();
  app.add_option("--order", cfg.order, "order spec: D, A, D.shift(w), ...")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  app.add_flag("--json", cfg.json, "emit JSON reports");
  app.add_flag("--timing", cfg.timing, "include wall-clock timings");
  app.add_option("--max-ball", cfg.max_ball, "element limit for ball enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "length limit for input words")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<int(const GroupParams&)> action;

  std::string nf_word;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("word", nf_word)->required();
  nf->callback([&] {
    action = [&](const GroupParams& p) {
      const Word w = detail::read_word(cfg, nf_word);
      const NormalForm g = normal_form(w, p);
      if (cfg.json) {
        Report r = detail::command_report("nf", p, cfg, {{"word", nf_word}, {"alphabet", alphabet_name(w.alphabet())}});
        r.stats["normal_form"] = to_string(g);
        r.stats["central"] = g.central;
        r.stats["weight"] = weight(g, p);
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        out << to_string(g) << "\n";
      }
      return kExitOk;
    };
  });

  std::string cmp_g, cmp_h;
  auto* cmp = app.add_subcommand("cmp", "compare two elements under --order");
  cmp->add_option("first", cmp_g)->required();
  cmp->add_option("second", cmp_h)->required();
  cmp->callback([&] {
    action = [&](const GroupParams& p) {
      const Word g = detail::read_word(cfg, cmp_g), h = detail::read_word(cfg, cmp_h);
      const OrderSpec spec = parse_order_spec(cfg.order, p, detail::fixed_alphabet(cfg));
      const auto c = compare(spec, normal_form(g, p), normal_form(h, p), p);
      if (cfg.json) {
        Report r = detail::command_report("cmp", p, cfg, {{"order", spec.to_string()}, {"g", cmp_g}, {"h", cmp_h}});
        r.stats["result"] = ordering_name(c);
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        out << ordering_name(c) << "\n";
      }
      return kExitOk;
    };
  });

  std::string sign_text;
  auto* sgn = app.add_subcommand("sign", "sign of an element under --order");
  sgn->add_option("word", sign_text)->required();
  sgn->callback([&] {
    action = [&](const GroupParams& p) {
      const Word w = detail::read_word(cfg, sign_text);
      const OrderSpec spec = parse_order_spec(cfg.order, p, detail::fixed_alphabet(cfg));
      const Sign s = sign(spec, normal_form(w, p), p);
      if (cfg.json) {
        Report r = detail::command_report("sign", p, cfg, {{"order", spec.to_string()}, {"word", sign_text}});
        r.stats["sign"] = detail::sign_word(s);
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        out << detail::sign_word(s) << "\n";
      }
      return kExitOk;
    };
  });

  std::string act_word, act_end;
  auto* act = app.add_subcommand("act", "apply an element to E and F, or to --end");
  act->add_option("word", act_word)->required();
  act->add_option("--end", act_end, "end as \"(N; +l1 l2 [p1 p2])\"");
  act->callback([&] {
    action = [&](const GroupParams& p) {
      const Word w = detail::read_word(cfg, act_word);
      std::vector<std::pair<std::string, End>> points;
      if (!act_end.empty())
        points.emplace_back("e", parse_end(act_end, p));
      else
        points = {{"E", end_E()}, {"F", end_F()}};
      json results = json::object();
      for (const auto& [name, e] : points) {
        const End image = apply_element(w, e, p);
        results["g(" + name + ")"] = to_string(image);
        if (!cfg.json) out << "g(" << name << ") = " << to_string(image) << "\n";
      }
      if (cfg.json) {
        json config = {{"word", act_word}};
        if (!act_end.empty()) config["end"] = act_end;
        Report r = detail::command_report("act", p, cfg, config);
        r.stats["images"] = results;
        out << r.to_json(cfg.timing).dump(2) << "\n";
      }
      return kExitOk;
    };
  });

  std::string tr_word, tr_to;
  auto* tr = app.add_subcommand("translate", "rewrite a word over another alphabet");
  tr->add_option("word", tr_word)->required();
  tr->add_option("--to", tr_to, "target alphabet: xy, s or a")->required();
  tr->callback([&] {
    action = [&](const GroupParams& p) {
      const Word w = detail::read_word(cfg, tr_word);
      auto target = parse_alphabet_name(tr_to);
      if (!target || *target == Alphabet::Free) throw UsageError("unknown target alphabet '" + tr_to + "'");
      const std::string text = format_word(translate(w, *target, p));
      if (cfg.json) {
        Report r = detail::command_report("translate", p, cfg, {{"word", tr_word}, {"to", alphabet_name(*target)}});
        r.stats["result"] = text;
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        out << text << "\n";
      }
      return kExitOk;
    };
  });

  std::vector<std::string> tw_words;
  bool tw_inverse = false;
  auto* tw = app.add_subcommand("twist", "twisted (or detwisted) generating set");
  tw->add_option("words", tw_words, "ordered generators, e.g. s1 s2")->required();
  tw->add_flag("--detwist", tw_inverse, "compute the detwisted set instead");
  tw->callback([&] {
    action = [&](const GroupParams& p) {
      std::vector<Word> gens;
      for (const auto& t : tw_words) gens.push_back(detail::read_word(cfg, t));
      for (std::size_t i = 1; i < gens.size(); ++i)
        if (gens[i].alphabet() != gens[0].alphabet()) throw UsageError("twist generators mix alphabets");
      const auto result = tw_inverse ? detwist_set(gens) : twist_set(gens);
      json items = json::array();
      for (const auto& w : result) items.push_back(format_word(w));
      if (cfg.json) {
        Report r = detail::command_report(tw_inverse ? "detwist" : "twist", p, cfg, {{"words", tw_words}});
        r.items = static_cast<long>(result.size());
        r.stats["result"] = items;
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        for (const auto& w : result) out << format_word(w) << "\n";
      }
      return kExitOk;
    };
  });

  std::string verify_name;
  auto* ver = app.add_subcommand("verify", "run a named check or 'all'");
  ver->add_option("check", verify_name, "check name or 'all'")->required();
  ver->callback([&] {
    action = [&](const GroupParams& p) {
      std::vector<Report> reports;
      if (verify_name == "all") {
        reports = run_default_suite(p, cfg.seed);
      } else {
        const auto& names = check_names();
        if (std::find(names.begin(), names.end(), verify_name) == names.end()) {
          std::string list;
          for (const auto& n : names) list += " " + n;
          throw UsageError("unknown check '" + verify_name + "'; known:" + list + " all");
        }
        reports = run_default_check(verify_name, p, cfg.seed);
      }
      detail::print_reports(reports, cfg, out);
      return detail::exit_code(reports);
    };
  });

  auto* exp = app.add_subcommand("explore", "exploration experiments");
  exp->require_subcommand(1);
  int conv_radius = 3, conv_kmax = 4, conv_witness = 6;
  auto* conv = exp->add_subcommand("convergence", "conjugates of <_D by b^k a against <_D");
  conv->add_option("--radius", conv_radius)->check(CLI::PositiveNumber)->capture_default_str();
  conv->add_option("--kmax", conv_kmax)->check(CLI::NonNegativeNumber)->capture_default_str();
  conv->add_option("--witness-radius", conv_witness)->check(CLI::PositiveNumber)->capture_default_str();
  conv->callback([&] {
    action = [&](const GroupParams& p) {
      std::vector<Report> reports{check_convergence(p, conv_radius, conv_kmax, conv_witness)};
      if (cfg.json) {
        detail::print_reports(reports, cfg, out);
      } else {
        const Report& r = reports.front();
        detail::print_reports(reports, cfg, out);
        if (r.stats.contains("per_k"))
          for (const auto& e : r.stats["per_k"]) {
            out << "  k=" << e["k"].get<int>() << " differences=" << e["differences"].get<long>()
                << " wide_differences=" << e["wide_differences"].get<long>();
            if (e.contains("distinguisher")) out << " distinguisher=" << e["distinguisher"].get<std::string>();
            out << "\n";
          }
        if (r.stats.contains("K")) out << "  K=" << r.stats["K"].get<int>() << "\n";
      }
      return detail::exit_code(reports);
    };
  });

  int fp_radius = 2;
  auto* fp = exp->add_subcommand("fingerprint", "signs of --order on a word-length ball");
  fp->add_option("--radius", fp_radius)->check(CLI::PositiveNumber)->capture_default_str();
  fp->callback([&] {
    action = [&](const GroupParams& p) {
      const OrderSpec spec = parse_order_spec(cfg.order, p, detail::fixed_alphabet(cfg));
      const Alphabet alpha = detail::fixed_alphabet(cfg).value_or(default_alphabet(spec));
      const Fingerprint f = fingerprint(spec, alpha, fp_radius, p, cfg.max_ball);
      if (cfg.json) {
        Report r = detail::command_report("fingerprint", p, cfg,
                                          {{"order", spec.to_string()}, {"alphabet", alphabet_name(alpha)},
                                           {"radius", fp_radius}});
        r.items = static_cast<long>(f.entries.size());
        r.stats["fingerprint"] = fingerprint_json(f);
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        for (const auto& e : f.entries) out << sign_char(e.sign) << " " << e.text << "  (" << format_word(e.word) << ")\n";
      }
      return kExitOk;
    };
  });

  int min_radius = 4;
  auto* mn = exp->add_subcommand("minimal", "least positive element of a word-length ball");
  mn->add_option("--radius", min_radius)->check(CLI::PositiveNumber)->capture_default_str();
  mn->callback([&] {
    action = [&](const GroupParams& p) {
      const OrderSpec spec = parse_order_spec(cfg.order, p, detail::fixed_alphabet(cfg));
      const Alphabet alpha = detail::fixed_alphabet(cfg).value_or(default_alphabet(spec));
      const BallElement e = minimal_positive_probe(spec, alpha, min_radius, p, cfg.max_ball);
      if (cfg.json) {
        Report r = detail::command_report("minimal", p, cfg,
                                          {{"order", spec.to_string()}, {"alphabet", alphabet_name(alpha)},
                                           {"radius", min_radius}});
        r.stats["minimal_positive"] = format_word(e.word);
        r.stats["normal_form"] = e.text;
        out << r.to_json(cfg.timing).dump(2) << "\n";
      } else {
        out << format_word(e.word) << "\n";
      }
      return kExitOk;
    };
  });

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const GroupParams params(cfg.m, cfg.n);
    if (!action) throw UsageError("no subcommand given");
    return action(params);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EndError& e) {
    err << "invalid end: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ordcalc::cli
