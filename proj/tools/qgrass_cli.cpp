#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgrass/construct.hpp"
#include "qgrass/error.hpp"
#include "qgrass/reptype.hpp"
#include "qgrass/serialize.hpp"

using namespace qgrass;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  std::size_t jobs = 1;
  std::string output = "json";
  std::string field;
  bool count_only = false;

  std::optional<Field> field_override() const {
    if (field.empty()) return std::nullopt;
    return Field::parse(field);
  }
  Field field_or(const char* fallback) const { return Field::parse(field.empty() ? fallback : field); }

  CheckOptions check() const {
    CheckOptions opts;
    opts.enumeration.budget = budget;
    opts.enumeration.jobs = jobs;
    opts.search.budget = budget;
    opts.search.seed = seed;
    return opts;
  }
};

class MalformedJson : public Error {
 public:
  using Error::Error;
};

// Arguments are either a path or an inline JSON document starting with '{'.
Json load_json(const std::string& arg) {
  std::string text;
  std::string source = "argument";
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    source = arg;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedJson("malformed JSON in " + source + " (byte " + std::to_string(e.byte) +
                        "): " + e.what());
  }
}

Quiver load_quiver(const std::string& arg) {
  Json j = load_json(arg);
  return quiver_from_json(j.contains("quiver") ? j["quiver"] : j);
}

Representation load_rep(const std::string& arg, const RunConfig& cfg) {
  return representation_from_json(load_json(arg), cfg.field_override());
}

void emit(const Json& report, const RunConfig& cfg) {
  if (cfg.output == "text") {
    if (!report.is_object()) {
      std::cout << report.dump() << "\n";
      return;
    }
    for (const auto& [key, value] : report.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return;
  }
  std::cout << report.dump(2) << "\n";
}

int verdict(bool holds) { return holds ? kOk : kCheckFailed; }

// Reduced K(n) modules used by the demos.
Representation coordinate_module(QuiverPtr k, const Field& f) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < k->arrow_count(); ++i) {
    Matrix g(f, 2, 1);
    if (i < 2) g.set_int(i, 0, 1);
    mats.push_back(g);
  }
  return Representation(k, f, {1, 2}, mats);
}

Representation diagonal_module(QuiverPtr k, const Field& f) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < k->arrow_count(); ++i) {
    if (i == 0) {
      mats.push_back(Matrix::identity(f, 2));
    } else if (i == 1) {
      mats.push_back(Matrix::from_ints(f, {{1, 0}, {0, 2}}));
    } else {
      mats.emplace_back(f, 2, 2);
    }
  }
  return Representation(k, f, {2, 2}, mats);
}

Representation bristle_module(QuiverPtr k, const Field& f) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < k->arrow_count(); ++i) mats.push_back(Matrix::from_ints(f, {{i == 0 ? 1 : 0}}));
  return Representation(k, f, {1, 1}, mats);
}

std::vector<std::pair<std::string, Representation>> demo_modules(const EtaContext& ctx, const Field& f) {
  std::vector<std::pair<std::string, Representation>> out;
  out.emplace_back("bristle", bristle_module(ctx.kronecker, f));
  out.emplace_back("coordinate", coordinate_module(ctx.kronecker, f));
  if (f.characteristic() != 2) out.emplace_back("diagonal", diagonal_module(ctx.kronecker, f));
  return out;
}

// Condition (C) and the bijection for each demo module.
Json run_instances(const EtaContext& ctx, const Field& f, const RunConfig& cfg, bool& holds) {
  Json out = Json::array();
  for (const auto& [name, n_rep] : demo_modules(ctx, f)) {
    EtaWitness w = build_eta(ctx, n_rep);
    ConditionCReport c = check_condition_C(ctx, w, cfg.check());
    BijectionReport bij = check_bijection(ctx, n_rep, cfg.check());
    holds = holds && c.holds() && bij.equal();
    out.push_back({{"name", name},
                   {"n", to_json(n_rep)},
                   {"condition_c", to_json(ctx.x->quiver(), c)},
                   {"bijection", to_json(bij)}});
  }
  return out;
}

std::vector<Scalar> parse_lambdas(const std::vector<long long>& raw, std::size_t n, const Field& f) {
  if (raw.empty()) return default_lambdas(n, f);
  std::vector<Scalar> out;
  for (long long v : raw) out.push_back(Scalar::from_int(f, v));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Quiver Grassmannians, Hom/Ext and the Kronecker embedding functor over exact fields"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "p=<prime> or rational (overrides the input files)");
  app.add_option("--seed", cfg.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--budget", cfg.budget, "search node / element budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--output", cfg.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--count-only", cfg.count_only, "omit points from Grassmannian reports");

  int code = kOk;
  std::string quiver_arg, m_arg, n_arg, x_arg, y_arg, d_arg, e_arg;
  std::size_t a_count = 2, demo_n = 2, demo_b = 2;
  std::vector<long long> lambdas;

  auto* classify_cmd = app.add_subcommand("classify", "representation type of a quiver");
  classify_cmd->add_option("--quiver", quiver_arg, "quiver or representation JSON")->required();
  classify_cmd->callback([&] {
    Quiver q = load_quiver(quiver_arg);
    Json out = to_json(classify(q));
    out["tits"] = to_json(tits_definiteness(q));
    emit(out, cfg);
  });

  auto* hom_cmd = app.add_subcommand("hom", "basis of Hom(M, N)");
  hom_cmd->add_option("--m", m_arg)->required();
  hom_cmd->add_option("--n", n_arg)->required();
  hom_cmd->callback([&] {
    HomBasis h = hom_basis(load_rep(m_arg, cfg), load_rep(n_arg, cfg));
    Json basis = Json::array();
    for (const auto& f : h.basis) basis.push_back(to_json(f));
    emit({{"dim", h.dim()}, {"basis", basis}}, cfg);
  });

  auto* ext_cmd = app.add_subcommand("ext1", "basis of Ext^1(M, N) as cocycles");
  ext_cmd->add_option("--m", m_arg)->required();
  ext_cmd->add_option("--n", n_arg)->required();
  ext_cmd->callback([&] {
    Representation m = load_rep(m_arg, cfg);
    Ext1Result e = ext1(m, load_rep(n_arg, cfg));
    Json basis = Json::array();
    for (const auto& c : e.basis) basis.push_back(to_json(m, c));
    emit({{"dim", e.dim}, {"basis", basis}}, cfg);
  });

  auto* euler_cmd = app.add_subcommand("euler", "Euler form <d, e>");
  euler_cmd->add_option("--quiver", quiver_arg)->required();
  euler_cmd->add_option("--d", d_arg)->required();
  euler_cmd->add_option("--e", e_arg)->required();
  euler_cmd->callback([&] {
    Quiver q = load_quiver(quiver_arg);
    emit(Json(euler_form(q, dims_from_json(q, load_json(d_arg)), dims_from_json(q, load_json(e_arg)))),
         cfg);
  });

  auto* brick_cmd = app.add_subcommand("brick", "brick, exceptional and indecomposable tests");
  brick_cmd->add_option("--m", m_arg)->required();
  brick_cmd->callback([&] {
    Representation m = load_rep(m_arg, cfg);
    SearchOptions s = cfg.check().search;
    bool brick = !m.is_zero() && is_brick(m);
    emit({{"brick", brick},
          {"exceptional", brick && is_exceptional(m)},
          {"indecomposable", is_indecomposable(m, s)},
          {"dim_end", hom_dim(m, m)}},
         cfg);
  });

  auto* grass_cmd = app.add_subcommand("grassmannian", "points of G_d(M) over F_p");
  grass_cmd->require_subcommand(1);
  for (const char* mode : {"list", "count"}) {
    auto* sub = grass_cmd->add_subcommand(mode, std::string(mode) + " the submodules");
    sub->add_option("--m", m_arg)->required();
    sub->add_option("--d", d_arg, "dimension vector {vertex: k}")->required();
    const bool count_mode = std::string(mode) == "count";
    sub->callback([&, count_mode] {
      Representation m = load_rep(m_arg, cfg);
      DimVector d = dims_from_json(m.quiver(), load_json(d_arg));
      if (count_mode || cfg.count_only) {
        GrassmannianReport r;
        r.parent = std::make_shared<const Representation>(m);
        r.dimvec = d;
        r.field = m.field();
        r.count = count_submodules(m, d, cfg.check().enumeration);
        emit(to_json(r, true), cfg);
      } else {
        emit(to_json(enumerate_submodules(m, d, cfg.check().enumeration)), cfg);
      }
    });
  }

  auto* eta_cmd = app.add_subcommand("eta", "the functor from K(n) modules into E(Y, X)");
  eta_cmd->require_subcommand(1);
  auto* eta_build = eta_cmd->add_subcommand("build", "build eta(N) with its exact sequence");
  eta_build->add_option("--x", x_arg)->required();
  eta_build->add_option("--y", y_arg)->required();
  eta_build->add_option("--n", n_arg, "module on K(n), n = dim Ext^1(Y, X)")->required();
  eta_build->callback([&] {
    EtaContext ctx = make_eta_context(load_rep(x_arg, cfg), load_rep(y_arg, cfg));
    Json out = to_json(build_eta(ctx, load_rep(n_arg, cfg)));
    out["ext_dim"] = ctx.n;
    emit(out, cfg);
  });

  auto* check_c = app.add_subcommand("check-c", "condition (C) for eta(N)");
  check_c->add_option("--x", x_arg)->required();
  check_c->add_option("--y", y_arg)->required();
  check_c->add_option("--n", n_arg)->required();
  check_c->callback([&] {
    EtaContext ctx = make_eta_context(load_rep(x_arg, cfg), load_rep(y_arg, cfg));
    ConditionCReport r = check_condition_C(ctx, build_eta(ctx, load_rep(n_arg, cfg)), cfg.check());
    emit(to_json(ctx.x->quiver(), r), cfg);
    code = verdict(r.holds());
  });

  auto* lemma1 = app.add_subcommand("check-lemma1", "submodules of X^a with dimension x are X");
  lemma1->add_option("--x", x_arg)->required();
  lemma1->add_option("--a", a_count)->capture_default_str();
  lemma1->callback([&] {
    Representation x = load_rep(x_arg, cfg);
    Lemma1Report r = check_lemma1(x, a_count, cfg.check());
    emit(to_json(x.quiver(), r), cfg);
    code = verdict(r.holds());
  });

  auto* lemma2 = app.add_subcommand("check-lemma2", "(w,w) submodules of X^a are powers of X");
  lemma2->add_option("--x", x_arg)->required();
  lemma2->add_option("--a", a_count)->capture_default_str();
  lemma2->callback([&] {
    Representation x = load_rep(x_arg, cfg);
    Lemma2Report r = check_lemma2(x, a_count, cfg.check());
    emit(to_json(x.quiver(), r), cfg);
    code = verdict(r.holds());
  });

  auto* bij = app.add_subcommand("bijection", "compare |G_(1,1)(N)| with |G_(x+y)(eta N)|");
  bij->add_option("--x", x_arg)->required();
  bij->add_option("--y", y_arg)->required();
  bij->add_option("--n", n_arg)->required();
  bij->callback([&] {
    EtaContext ctx = make_eta_context(load_rep(x_arg, cfg), load_rep(y_arg, cfg));
    BijectionReport r = check_bijection(ctx, load_rep(n_arg, cfg), cfg.check());
    emit(to_json(r), cfg);
    code = verdict(r.equal());
  });

  auto* demo = app.add_subcommand("demo", "built-in instances");
  demo->require_subcommand(1);

  auto* demo2 = demo->add_subcommand("case2", "K(3) family X, Y = (k,k;1,0,0)");
  demo2->add_option("--n", demo_n, "number of lambdas")->capture_default_str();
  demo2->add_option("--lambdas", lambdas, "lambda values (default 1..n)")->delimiter(',');
  demo2->callback([&] {
    Field f = cfg.field_or("p=3");
    Representation x = case2_X(parse_lambdas(lambdas, demo_n, f), f);
    Representation y = case2_Y(f);
    EtaContext ctx = make_eta_context(x, y);
    bool holds = true;
    Lemma2Report l2 = check_lemma2(x, 2, cfg.check());
    holds = holds && l2.holds();
    Json out = {{"field", to_json(f)},
                {"x", to_json(x)},
                {"y", to_json(y)},
                {"x_is_brick", is_brick(x)},
                {"y_is_brick", is_brick(y)},
                {"orthogonal", are_orthogonal_bricks(x, y)},
                {"ext_dim", ctx.n},
                {"lemma2", to_json(x.quiver(), l2)}};
    out["instances"] = run_instances(ctx, f, cfg, holds);
    out["holds"] = holds;
    emit(out, cfg);
    code = verdict(holds);
  });

  auto* demo1 = demo->add_subcommand("case1", "K(2) plus a source w -> 2, X preprojective");
  demo1->callback([&] {
    Field f = cfg.field_or("p=3");
    Case1Pair pair = case1_default_pair(f);
    EtaContext ctx = make_eta_context(pair.x, pair.y);
    bool holds = pair.exceptional;
    Lemma1Report l1 = check_lemma1(pair.x, 2, cfg.check());
    holds = holds && l1.holds();
    ExtremalVertex ev = find_removable_extremal_vertex(pair.x.quiver());
    Json out = {{"field", to_json(f)},
                {"x", to_json(pair.x)},
                {"y", to_json(pair.y)},
                {"exceptional", pair.exceptional},
                {"ext_dim", ctx.n},
                {"removable_vertex", ev.vertex},
                {"lemma1", to_json(pair.x.quiver(), l1)}};
    out["instances"] = run_instances(ctx, f, cfg, holds);
    out["holds"] = holds;
    emit(out, cfg);
    code = verdict(holds);
  });

  auto* demo_r = demo->add_subcommand("remark", "X' with a nilpotent third arrow: condition (C) fails");
  demo_r->add_option("--b", demo_b, "source dimension of N (1, 2 or 3)")->capture_default_str();
  demo_r->callback([&] {
    Field f = cfg.field_or("p=3");
    RemarkReport r = remark_counterexample_demo(f, demo_b, cfg.check());
    Json out = to_json(r);
    out["field"] = to_json(f);
    out["holds"] = r.condition.holds();
    emit(out, cfg);
    code = verdict(r.condition.holds());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const MalformedJson& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (raise --budget)\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
