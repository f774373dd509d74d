#include "gravicat/cli.hpp"

#include <cstdlib>
#include <functional>

#include <CLI11.hpp>

#include "gravicat/error.hpp"
#include "gravicat/json_io.hpp"
#include "gravicat/manifest.hpp"

namespace gravicat {

namespace {

long long read_rank_cap() {
  const char* env = std::getenv("GRAVICAT_MAX_RANK");
  if (!env || !*env) return 64;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v < 0)
    throw Error("SchemaError", "GRAVICAT_MAX_RANK must be a nonnegative integer");
  return v;
}

std::vector<Rat> parse_rational_csv(const std::string& csv) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string piece = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(rat_from_string(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

BettiProfile parse_betti_csv(const std::string& csv) {
  std::vector<Rat> vals = parse_rational_csv(csv);
  if (vals.size() != 5)
    throw Error("SchemaError", "--betti expects five comma-separated numbers b0,...,b4");
  BettiProfile b;
  for (std::size_t i = 0; i < 5; ++i) {
    if (rat_den(vals[i]) != 1 || rat_num(vals[i]) < 0)
      throw Error("SchemaError", "Betti numbers must be nonnegative integers");
    b.b[i] = static_cast<long long>(rat_num(vals[i]));
  }
  return b;
}

QMat basis_from_json(const Json& j, std::size_t rank) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("basis")) throw Error("SchemaError", "basis file needs a \"basis\" array");
    rows = &j.at("basis");
  }
  if (!rows->is_array()) throw Error("SchemaError", "basis must be an array of rows");
  std::size_t n = rows->size();
  if (n != rank)
    throw Error("DimensionMismatch", "basis rows must match the lattice rank");
  std::size_t k = n == 0 ? 0 : (*rows)[0].size();
  QMat b(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*rows)[i].is_array() || (*rows)[i].size() != k)
      throw Error("SchemaError", "basis rows must all have the same length");
    for (std::size_t c = 0; c < k; ++c) b(i, c) = rat_from_json((*rows)[i][c]);
  }
  return b;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, cobordism, and wall-crossing arithmetic"};
  app.require_subcommand(1);
  std::function<void()> action;

  // analyze / classify / k0 / diag / smooth-check share one lattice option
  struct LatticeCmd {
    CLI::App* cmd = nullptr;
    std::string ref;
  };
  auto add_lattice_cmd = [&](const std::string& name, const std::string& desc) {
    auto holder = std::make_shared<LatticeCmd>();
    holder->cmd = app.add_subcommand(name, desc);
    holder->cmd->add_option("--lattice", holder->ref, "builtin:NAME or a JSON file path")
        ->required();
    return holder;
  };

  auto analyze_cmd = add_lattice_cmd("analyze", "Rank, signature, parity, determinant");
  analyze_cmd->cmd->callback([&, analyze_cmd] {
    action = [&, analyze_cmd] {
      Lattice l = load_lattice_ref(analyze_cmd->ref, read_rank_cap());
      emit(out, profile_to_json(analyze(l)));
    };
  });

  auto classify_cmd = add_lattice_cmd("classify", "Canonical form of an indefinite unimodular lattice");
  classify_cmd->cmd->callback([&, classify_cmd] {
    action = [&, classify_cmd] {
      Lattice l = load_lattice_ref(classify_cmd->ref, read_rank_cap());
      emit(out, canonical_to_json(classify_indefinite(l)));
    };
  });

  auto k0_cmd = add_lattice_cmd("k0", "Class of an even unimodular lattice over [U] and [E8]");
  k0_cmd->cmd->callback([&, k0_cmd] {
    action = [&, k0_cmd] {
      Lattice l = load_lattice_ref(k0_cmd->ref, read_rank_cap());
      K0Result r = k0_class(l);
      Json j = k0_to_json(r.cls);
      if (r.definite_input) j["warnings"] = Json::array({"DefiniteLattice"});
      emit(out, j);
    };
  });

  auto diag_cmd = add_lattice_cmd("diag", "Diagonalizability of a definite unimodular lattice");
  diag_cmd->cmd->callback([&, diag_cmd] {
    action = [&, diag_cmd] {
      Lattice l = load_lattice_ref(diag_cmd->ref, read_rank_cap());
      Json j;
      j["diagonalizable"] = diagonalizable_definite(l);
      emit(out, j);
    };
  });

  auto smooth_cmd = add_lattice_cmd("smooth-check", "Topological/smooth realizability of a form");
  smooth_cmd->cmd->callback([&, smooth_cmd] {
    action = [&, smooth_cmd] {
      Lattice l = load_lattice_ref(smooth_cmd->ref, read_rank_cap());
      emit(out, smooth_report_to_json(smooth_closed_constraint(l)));
    };
  });

  auto glue = std::make_shared<std::pair<std::string, std::string>>();
  {
    CLI::App* cmd = app.add_subcommand("glue", "Evaluate a gluing expression over a manifest");
    cmd->add_option("--manifest", glue->first, "manifest JSON file")->required();
    cmd->add_option("--expr", glue->second, "expression over named records")->required();
    cmd->callback([&, glue] {
      action = [&, glue] {
        Manifest m = load_manifest(glue->first, read_rank_cap());
        ExprPtr e = parse_expression(glue->second);
        emit(out, record_to_json(evaluate(*e, m)));
      };
    });
  }

  struct WallsArgs {
    std::string ref, from, to;
    long long d = 0;
    bool primitive_only = false;
  };
  auto walls_args = std::make_shared<WallsArgs>();
  {
    CLI::App* cmd = app.add_subcommand("walls", "Wall vectors crossed between two periods");
    cmd->add_option("--lattice", walls_args->ref, "builtin:NAME or a JSON file path")->required();
    cmd->add_option("--d", walls_args->d, "wall level bound")->required();
    cmd->add_option("--from", walls_args->from, "starting period, comma-separated rationals")
        ->required();
    cmd->add_option("--to", walls_args->to, "ending period, comma-separated rationals")->required();
    cmd->add_flag("--primitive-only", walls_args->primitive_only, "count primitive vectors only");
    cmd->callback([&, walls_args] {
      action = [&, walls_args] {
        Lattice l = load_lattice_ref(walls_args->ref, read_rank_cap());
        Period p0{l, parse_rational_csv(walls_args->from)};
        Period p1{l, parse_rational_csv(walls_args->to)};
        auto xs = crossing_set(p0, p1, Int(walls_args->d), walls_args->primitive_only);
        Json vectors = Json::array();
        for (const auto& w : xs) {
          Json v = Json::array();
          for (const Int& c : w.x) v.push_back(int_to_json(c));
          vectors.push_back(std::move(v));
        }
        Json j;
        j["count"] = xs.size();
        j["vectors"] = std::move(vectors);
        emit(out, j);
      };
    });
  }

  struct MemberArgs {
    std::string ref, basis;
    long long d = 0;
    bool primitive_only = false;
  };
  auto member_args = std::make_shared<MemberArgs>();
  {
    CLI::App* cmd = app.add_subcommand("wall-member", "Wall membership of a negative subspace");
    cmd->add_option("--lattice", member_args->ref, "builtin:NAME or a JSON file path")->required();
    cmd->add_option("--basis", member_args->basis, "JSON file with the subspace basis")->required();
    cmd->add_option("--d", member_args->d, "wall level bound")->required();
    cmd->add_flag("--primitive-only", member_args->primitive_only, "restrict to primitive witnesses");
    cmd->callback([&, member_args] {
      action = [&, member_args] {
        Lattice l = load_lattice_ref(member_args->ref, read_rank_cap());
        NegativeSubspace s{l, basis_from_json(read_json_file(member_args->basis), l.rank())};
        auto w = wall_membership(s, Int(member_args->d), member_args->primitive_only);
        Json j;
        j["member"] = w.has_value();
        if (w) {
          Json x = Json::array();
          for (const Int& c : w->x) x.push_back(int_to_json(c));
          j["witness"] = std::move(x);
          j["norm"] = int_to_json(w->norm);
        }
        emit(out, j);
      };
    });
  }

  struct DimArgs {
    long long chi = 0, sigma = 0, d = 0;
  };
  auto dim_args = std::make_shared<DimArgs>();
  {
    CLI::App* cmd = app.add_subcommand("dim", "Expected dimension 8d - 3(sigma + chi)/2");
    cmd->add_option("--chi", dim_args->chi, "Euler characteristic")->required();
    cmd->add_option("--sigma", dim_args->sigma, "signature")->required();
    cmd->add_option("--d", dim_args->d, "charge")->required();
    cmd->callback([&, dim_args] {
      action = [&, dim_args] {
        Json j;
        j["dimension"] = expected_dimension(dim_args->d, dim_args->chi, dim_args->sigma);
        emit(out, j);
      };
    });
  }

  struct SymdimArgs {
    std::string betti;
    long long weight = 0;
    long long degree = -1;
    bool has_degree = false;
  };
  auto symdim_args = std::make_shared<SymdimArgs>();
  {
    CLI::App* cmd = app.add_subcommand("symdim", "Bigraded dimensions of the free algebra");
    cmd->add_option("--betti", symdim_args->betti, "b0,b1,b2,b3,b4")->required();
    cmd->add_option("--weight", symdim_args->weight, "monomial weight")->required();
    cmd->add_option("--degree", symdim_args->degree, "homological degree")
        ->each([symdim_args](const std::string&) { symdim_args->has_degree = true; });
    cmd->callback([&, symdim_args] {
      action = [&, symdim_args] {
        BettiProfile b = parse_betti_csv(symdim_args->betti);
        if (symdim_args->has_degree) {
          Json j;
          j["dimension"] = int_to_json(sym_dimension(b, symdim_args->weight, symdim_args->degree));
          emit(out, j);
        } else {
          Json rows = Json::array();
          for (const auto& [deg, dim] : sym_dimension_row(b, symdim_args->weight))
            rows.push_back(Json::array({deg, int_to_json(dim)}));
          Json j;
          j["weight"] = symdim_args->weight;
          j["dimensions"] = std::move(rows);
          emit(out, j);
        }
      };
    });
  }

  struct ConvolveArgs {
    std::string a, b;
    long long dmax = 0;
  };
  auto conv_args = std::make_shared<ConvolveArgs>();
  {
    CLI::App* cmd = app.add_subcommand("ledger-convolve", "Disjoint-union convolution of two ledgers");
    cmd->add_option("ledger_a", conv_args->a, "first ledger JSON file")->required();
    cmd->add_option("ledger_b", conv_args->b, "second ledger JSON file")->required();
    cmd->add_option("--dmax", conv_args->dmax, "truncation charge")->required();
    cmd->callback([&, conv_args] {
      action = [&, conv_args] {
        Ledger a = ledger_from_json(read_json_file(conv_args->a));
        Ledger b = ledger_from_json(read_json_file(conv_args->b));
        emit(out, ledger_to_json(convolve_disjoint(a, b, conv_args->dmax)));
      };
    });
  }

  struct CheckArgs {
    std::string file;
    bool do_normalize = false;
  };
  auto check_args = std::make_shared<CheckArgs>();
  {
    CLI::App* cmd = app.add_subcommand("ledger-check", "Simple-type recursion check");
    cmd->add_option("ledger", check_args->file, "ledger JSON file")->required();
    cmd->add_flag("--normalize", check_args->do_normalize, "also divide out the (w0 w4^2)^d growth");
    cmd->callback([&, check_args] {
      action = [&, check_args] {
        Ledger l = ledger_from_json(read_json_file(check_args->file));
        Json j;
        j["simple_type"] = simple_type_check(l);
        if (check_args->do_normalize) j["normalized"] = ledger_to_json(normalize(l));
        emit(out, j);
      };
    });
  }

  auto quadric_args = std::make_shared<std::pair<std::string, std::string>>();
  {
    CLI::App* cmd = app.add_subcommand("quadric", "Check <c1,c1> = 2 chi + 3 sigma on a record");
    cmd->add_option("--manifest", quadric_args->first, "manifest JSON file")->required();
    cmd->add_option("--name", quadric_args->second, "record name")->required();
    cmd->callback([&, quadric_args] {
      action = [&, quadric_args] {
        Manifest m = load_manifest(quadric_args->first, read_rank_cap());
        const CobordismRecord* r = m.find(quadric_args->second);
        if (!r) throw Error("UnboundName", "no record named '" + quadric_args->second + "'");
        Json j;
        j["holds"] = quadric_check(*r);
        j["c1_squared"] = int_to_json(inner(r->lattice, *r->c1, *r->c1));
        j["two_chi_plus_three_sigma"] = 2 * r->chi + 3 * r->sigma;
        emit(out, j);
      };
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gravicat");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (action) action();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    emit(out, error_to_json(e));
    return 1;
  } catch (const std::exception& e) {
    emit(out, error_to_json(Error("InternalError", e.what())));
    return 1;
  }
}

} // namespace gravicat
