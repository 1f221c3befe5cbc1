#include "bellmoment/cli.hpp"

#include <fstream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "bellmoment/bell.hpp"
#include "bellmoment/errors.hpp"
#include "bellmoment/json_io.hpp"
#include "bellmoment/moment.hpp"

namespace bellmoment::cli {

namespace {

enum class Format { text, json, latex };

struct Config {
  Format format = Format::text;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
};

std::string join(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s;
}

std::string bell_latex_line(const std::string& index, const Polynomial& p) {
  std::string lhs = "B_{" + index + "}";
  auto vars = p.variables();
  if (!vars.empty()) {
    bool multi = vars.front().is_multi();
    lhs += "(";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) lhs += multi ? ", " : ",";
      lhs += vars[i].to_latex();
    }
    lhs += ")";
  }
  return lhs + "={}&" + p.to_latex();
}

std::string latex_index(const MultiIndex& a) {
  std::string s;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (k) s += ", ";
    s += std::to_string(a[k]);
  }
  return s;
}

void emit_json(std::ostream& out, const json::json& j) { out << j.dump(2) << "\n"; }

void write_json_file(const std::string& path, const json::json& j) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

void print_spec(std::ostream& out, const MomentSpec& spec) {
  out << "rank " << spec.rank << ", order " << spec.order << ", dimension "
      << spec.dim << "\n";
  out << "m: " << join(spec.exponential.bases()) << "\n";
  for (const auto& [mu, a] : spec.additive) {
    out << "a_(" << mu.to_string() << "): " << join(a.gen_values()) << "\n";
  }
}

void print_members(std::ostream& out, const MomentSequence& seq, Format fmt) {
  out << "members f_alpha = B_alpha(a(x)) m(x), x_mu standing for a_mu(x):\n";
  for (const auto& [alpha, f] : seq.members) {
    out << "f_(" << alpha.to_string() << ") = "
        << (fmt == Format::latex ? f.coeff_poly.to_latex() : f.coeff_poly.to_string())
        << "\n";
  }
}

json::json members_json(const MomentSequence& seq) {
  json::json arr = json::json::array();
  for (const auto& [alpha, f] : seq.members) {
    arr.push_back({{"alpha", alpha.entries()}, {"poly", f.coeff_poly.to_string()}});
  }
  return arr;
}

/// Shared tail of construct/collapse/project/normalize: print or write either
/// the MomentSpec or its tabulation.
int emit_sequence(const MomentSpec& spec, std::optional<std::int64_t> radius,
                  const std::string& out_path, const Config& cfg, std::ostream& out) {
  auto seq = construct(spec);
  if (radius) {
    auto j = json::encode(tabulate(seq, *radius));
    if (!out_path.empty()) {
      write_json_file(out_path, j);
      out << "wrote tables of radius " << *radius << " to " << out_path << "\n";
    } else {
      emit_json(out, j);
    }
    return ok;
  }
  if (!out_path.empty()) {
    write_json_file(out_path, json::encode(spec));
    out << "wrote spec to " << out_path << "\n";
    return ok;
  }
  if (cfg.format == Format::json) {
    emit_json(out, {{"spec", json::encode(spec)}, {"members", members_json(seq)}});
  } else {
    print_spec(out, spec);
    print_members(out, seq, cfg.format);
  }
  return ok;
}

MomentSpec load_spec(const std::string& path) {
  return json::decode_spec(json::read_file(path));
}

void print_report(std::ostream& out, const VerifyReport& r, Format fmt) {
  if (fmt == Format::json) {
    emit_json(out, json::encode(r));
    return;
  }
  const char* gen = r.generator == GeneratorValue::one    ? "one"
                    : r.generator == GeneratorValue::zero ? "zero"
                                                          : "other";
  out << "status: " << json::status_name(r.status) << "\n";
  out << "generator at 0: " << gen << "\n";
  out << "checked: " << r.checked << (r.exhaustive ? " (exhaustive)" : " (sampled)")
      << "\n";
  out << "failures: " << r.failure_count << "\n";
  for (const auto& f : r.failures) {
    out << "  alpha=(" << f.alpha.to_string() << ")";
    for (const auto& p : f.points) out << " " << p.to_string();
    out << ": lhs=" << f.lhs.to_string() << " rhs=" << f.rhs.to_string() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bell polynomials and generalized moment sequences"};
  app.name("bellmoment");
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--budget", cfg.budget, "Sampled tuples when not exhaustive")
      ->envname("BELLMOMENT_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Sampling seed");

  std::uint32_t n = 0;
  auto* bell = app.add_subcommand("bell", "Complete Bell polynomial B_n");
  bell->add_option("n", n)->required();

  std::string alpha_text;
  bool check_gf = false, check_aczel = false, check_addition = false;
  auto* mbell = app.add_subcommand("mbell", "Multivariate Bell polynomial B_alpha");
  mbell->add_option("alpha", alpha_text, "Comma-separated multi-index")->required();
  mbell->add_flag("--check-gf", check_gf, "Compare with the generating function");
  mbell->add_flag("--check-aczel", check_aczel, "Compare with the explicit sum (rank 1)");
  mbell->add_flag("--check-addition", check_addition, "Check the addition formula");

  std::string in_path, out_path;
  std::optional<std::int64_t> radius;
  auto add_seq_cmd = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("spec", in_path, "Spec JSON file")->required();
    c->add_option("--tabulate", radius, "Emit tables on the box of this radius")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--out", out_path, "Write JSON to this file");
    return c;
  };
  auto* construct_cmd = add_seq_cmd("construct", "Build a moment sequence from a spec");
  auto* collapse_cmd = add_seq_cmd("collapse", "Rank-2 to rank-1 collapse of a spec");
  auto* project_cmd = add_seq_cmd("project", "Subfamily on selected coordinates");
  auto* normalize_cmd = add_seq_cmd("normalize", "Replace the exponential by 1");
  std::vector<std::size_t> keep;
  project_cmd->add_option("--keep", keep, "1-based coordinates to keep")
      ->delimiter(',')
      ->required();

  std::optional<std::size_t> l;
  auto* verify_cmd = app.add_subcommand("verify", "Check the defining equations");
  verify_cmd->add_option("tables", in_path, "Tables JSON file")->required();
  verify_cmd->add_option("--l", l, "Check the l-variable equation instead (rank 1)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Recover m and a_alpha from tables");
  reconstruct_cmd->add_option("tables", in_path, "Tables JSON file")->required();
  reconstruct_cmd->add_option("--out", out_path, "Write the recovered MomentSpec JSON to this file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (bell->parsed()) {
      auto b = complete_bell(n);
      switch (cfg.format) {
        case Format::text: out << b.value.to_string() << "\n"; break;
        case Format::latex:
          out << bell_latex_line(std::to_string(n), b.value) << "\n";
          break;
        case Format::json:
          emit_json(out, {{"n", n},
                          {"poly", b.value.to_string()},
                          {"latex", b.value.to_latex()}});
          break;
      }
      return ok;
    }

    if (mbell->parsed()) {
      auto alpha = MultiIndex::parse(alpha_text);
      auto b = mv_bell(alpha);
      std::vector<std::pair<std::string, bool>> checks;
      if (check_gf) {
        auto gf = bell_via_gf(alpha).value;
        auto mine = alpha.rank() == 1 ? rank1_rename(b.value) : b.value;
        checks.emplace_back("gf", mine == gf);
      }
      if (check_aczel) {
        if (alpha.rank() != 1) {
          err << "error: --check-aczel needs a rank-1 index\n";
          return usage_error;
        }
        bool same = alpha[0] == 0 ? b.value == Polynomial(Scalar(1))
                                  : rank1_rename(b.value) == aczel_form(alpha[0]).value;
        checks.emplace_back("aczel", same);
      }
      if (check_addition) checks.emplace_back("addition", addition_check(alpha));

      switch (cfg.format) {
        case Format::text:
          out << b.value.to_string() << "\n";
          for (const auto& [name, good] : checks) {
            out << "check " << name << ": " << (good ? "ok" : "MISMATCH") << "\n";
          }
          break;
        case Format::latex:
          out << bell_latex_line(latex_index(alpha), b.value) << "\n";
          break;
        case Format::json: {
          json::json j{{"alpha", alpha.entries()},
                       {"poly", b.value.to_string()},
                       {"latex", b.value.to_latex()}};
          for (const auto& [name, good] : checks) j["checks"][name] = good;
          emit_json(out, j);
          break;
        }
      }
      for (const auto& [name, good] : checks) {
        if (!good) {
          err << "error: " << name << " route disagrees for alpha=("
              << alpha.to_string() << ")\n";
          return inconsistent;
        }
      }
      return ok;
    }

    if (construct_cmd->parsed()) {
      return emit_sequence(load_spec(in_path), radius, out_path, cfg, out);
    }
    if (collapse_cmd->parsed()) {
      return emit_sequence(collapse_spec(load_spec(in_path)), radius, out_path, cfg, out);
    }
    if (normalize_cmd->parsed()) {
      auto spec = load_spec(in_path);
      spec.exponential = Exponential::identity(spec.dim);
      return emit_sequence(spec, radius, out_path, cfg, out);
    }
    if (project_cmd->parsed()) {
      auto spec = load_spec(in_path);
      std::set<std::size_t> coords;
      for (auto k : keep) {
        if (k == 0 || k > spec.rank) {
          err << "error: --keep coordinate " << k << " outside 1.." << spec.rank << "\n";
          return usage_error;
        }
        coords.insert(k - 1);
      }
      auto projected = project_seq(construct(spec), coords);
      return emit_sequence(projected.spec, radius, out_path, cfg, out);
    }

    if (verify_cmd->parsed()) {
      auto seq = json::decode_sequence(json::read_file(in_path));
      VerifyOptions opt;
      opt.sample_budget = cfg.budget;
      opt.seed = cfg.seed;
      auto report = l ? verify_multivariable(seq, *l, opt) : verify_rank(seq, opt);
      print_report(out, report, cfg.format);
      return report.status == VerifyStatus::fail ? failed : ok;
    }

    if (reconstruct_cmd->parsed()) {
      auto seq = json::decode_sequence(json::read_file(in_path));
      try {
        auto spec = reconstruct(seq);
        if (!out_path.empty()) {
          write_json_file(out_path, json::encode(spec));
          out << "wrote spec to " << out_path << "\n";
        } else if (cfg.format == Format::json) {
          emit_json(out, json::encode(spec));
        } else {
          print_spec(out, spec);
        }
        return ok;
      } catch (const NotMomentSequence& e) {
        if (cfg.format == Format::json) {
          json::json j{{"error", "not a moment sequence"},
                       {"alpha", e.alpha().entries()},
                       {"message", e.what()}};
          if (e.witness()) {
            j["witness"] = {{"x", e.witness()->x.coords()},
                            {"y", e.witness()->y.coords()}};
          }
          emit_json(out, j);
        } else {
          out << "not a moment sequence at alpha=(" << e.alpha().to_string() << ")";
          if (e.witness()) {
            out << ", witness x=" << e.witness()->x.to_string()
                << " y=" << e.witness()->y.to_string();
          }
          out << "\n";
        }
        err << "error: " << e.what() << "\n";
        return failed;
      }
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return inconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace bellmoment::cli
