#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scq/bassserre.hpp"
#include "scq/cone.hpp"
#include "scq/dehn.hpp"
#include "scq/dihedral.hpp"
#include "scq/io.hpp"
#include "scq/pieces.hpp"
#include "scq/pipeline.hpp"
#include "scq/treegeom.hpp"

namespace {

using namespace scq;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(std::stoi(part));
  return out;
}

// element of a product of dihedral groups: per-factor "k" or "k,e" joined by ';'
ProductElt parse_product_elt(const ProductGroup& g, const std::string& s) {
  ProductElt e = p_id(g);
  auto parts = split(s, ';');
  if (parts.size() != g.dihedral_orders.size())
    throw std::invalid_argument("element has " + std::to_string(parts.size()) +
                                " components, group has " +
                                std::to_string(g.dihedral_orders.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto kv = split(parts[i], ',');
    if (kv.size() > 2 || kv[0].empty()) throw std::invalid_argument("bad component " + parts[i]);
    long long k = std::stoll(kv[0]);
    bool refl = kv.size() == 2 && std::stoi(kv[1]) != 0;
    e.comps[i] = refl ? d_mul(d_rot(g.dihedral_orders[i], k), d_refl(g.dihedral_orders[i]))
                      : d_rot(g.dihedral_orders[i], k);
  }
  return e;
}

std::string product_elt_str(const ProductElt& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.comps.size(); ++i) {
    if (i) os << ";";
    os << e.comps[i].rot << "," << (e.comps[i].refl ? 1 : 0);
  }
  return os.str();
}

// free product of cyclic groups; word syntax "f:e.f:e..." or "1" for identity
GoGWord parse_gog(const FreeProduct& s, const std::string& text) {
  GoGWord w;
  if (text == "1" || text.empty()) return w;
  std::vector<Syllable> raw;
  for (const auto& part : split(text, '.')) {
    auto kv = split(part, ':');
    if (kv.size() != 2) throw std::invalid_argument("bad syllable " + part);
    Syllable y;
    y.factor = std::stoi(kv[0]);
    y.elt = std::stoi(kv[1]);
    raw.push_back(y);
  }
  return gog_normal_form(s, raw);
}

FreeProduct cyclic_product(const std::vector<int>& orders) {
  FreeProduct s;
  for (int m : orders) {
    Factor f;
    f.table = std::make_shared<FiniteGroupTable>(FiniteGroupTable::cyclic(m));
    s.factors.push_back(std::move(f));
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"small-cancellation invariants for Burnside-type quotients"};
  app.require_subcommand(1);

  std::string file, word_text, lambda_text = "1/6", threshold_text = "1/6";
  int radius = 2, rank = 2, maxlen = 1, k_factors = 0, m_chain = 4;
  long long exponent = 2, n_param = 16, nu0 = 1, mu_param = 1;
  double delta1 = 1.0, l0 = 1000.0, rho = 0.0, log_rho = 0.0;
  double inj_in = 1.0, a_in = 0.0, nu_stg = 1.0, delta_bar = 1.0, ell = 0.0;
  double delta_in = 1.0, l_in = 1.0, n_in = 1.0, d_in = 0.0, ell0 = 1.0, t_in = -1.0;
  int cone_n = 1, rot_k = 1;
  bool ell_inf = false;
  std::string orders_text = "16", gens_text, images_text, h_text, g0_text, word_gog = "1",
              cyclic_text = "2,3";
  int length = 6, mu_chain = 1, bound = 6, samples = 500;
  unsigned seed = 12345;

  auto* c_pieces = app.add_subcommand("pieces", "piece statistics of a presentation");
  c_pieces->add_option("file", file)->required();

  auto* c_sc = app.add_subcommand("check-sc", "C'(lambda) metric condition");
  c_sc->add_option("--lambda", lambda_text);
  c_sc->add_option("file", file)->required();

  auto* c_dehn = app.add_subcommand("dehn", "Dehn-reduce a word");
  c_dehn->add_option("--word", word_text)->required();
  c_dehn->add_option("file", file)->required();

  auto* c_ball = app.add_subcommand("ball", "count group elements in a ball");
  c_ball->add_option("--radius", radius);
  c_ball->add_option("file", file)->required();

  auto* c_delta = app.add_subcommand("delta", "cylinder overlap of primitive classes");
  c_delta->add_option("--rank", rank);
  c_delta->add_option("--maxlen", maxlen)->required();

  auto* c_cert = app.add_subcommand("cert", "level-1 Burnside certificate");
  c_cert->add_option("--rank", rank);
  c_cert->add_option("--exponent", exponent)->required();
  c_cert->add_option("--maxlen", maxlen)->required();
  c_cert->add_option("--threshold", threshold_text);

  double arc1 = 0, r1 = 0, arc2 = 0, r2 = 0, circ = 1;
  auto* c_cone = app.add_subcommand("cone", "comparison cone invariants");
  auto* c_mu = c_cone->add_subcommand("mu", "comparison map");
  c_mu->add_option("--rho", rho)->required();
  c_mu->add_option("--t", t_in)->required();
  auto* c_dist = c_cone->add_subcommand("dist", "cone metric");
  c_dist->add_option("--rho", rho)->required();
  c_dist->add_option("--circumference", circ)->required();
  c_dist->add_option("--arc1", arc1)->required();
  c_dist->add_option("--r1", r1)->required();
  c_dist->add_option("--arc2", arc2)->required();
  c_dist->add_option("--r2", r2)->required();
  auto* c_omega = c_cone->add_subcommand("omega", "total apex angle");
  c_omega->add_option("--rho", rho)->required();
  c_omega->add_option("--n", cone_n)->required();
  c_omega->add_option("--ell", ell0)->required();
  c_omega->add_option("--rot", rot_k);

  auto* c_dih = app.add_subcommand("dihedral", "dihedral product checks");
  auto* c_norm = c_dih->add_subcommand("normalizer", "quarter-turn normalizer element");
  c_norm->set_help_flag("--help", "print help");  // frees -h for the --h option
  c_norm->add_option("--orders", orders_text);
  c_norm->add_option("--gens", gens_text)->required();
  c_norm->add_option("--h", h_text)->required();
  c_norm->add_option("--n", n_param)->required();
  auto* c_chain = c_dih->add_subcommand("chain", "chain identity check");
  c_chain->set_help_flag("--help", "print help");
  c_chain->add_option("--orders", orders_text);
  c_chain->add_option("--g0", g0_text)->required();
  c_chain->add_option("--h", h_text)->required();
  c_chain->add_option("--mu", mu_chain);
  c_chain->add_option("--length", length);
  auto* c_embed = c_dih->add_subcommand("embed", "finite subgroup embedding check");
  c_embed->add_option("--table", file)->required();
  c_embed->add_option("--n", n_param)->required();
  c_embed->add_option("--k", k_factors)->required();
  c_embed->add_option("--gens", gens_text)->required();
  c_embed->add_option("--images", images_text)->required();

  auto* c_bs = app.add_subcommand("bs", "free product tree actions");
  auto* c_cls = c_bs->add_subcommand("classify", "elliptic or loxodromic");
  c_cls->add_option("--cyclic", cyclic_text);
  c_cls->add_option("--word", word_gog)->required();
  auto* c_nu = c_bs->add_subcommand("nu-scan", "chain-implication scan");
  c_nu->add_option("--cyclic", cyclic_text);
  c_nu->add_option("--bound", bound);
  c_nu->add_option("--samples", samples);
  c_nu->add_option("--seed", seed);
  auto* c_hnn = c_bs->add_subcommand("hnn", "wreath-image witness");
  c_hnn->add_option("--m", m_chain)->required();

  auto* c_budget = app.add_subcommand("budget", "induction constant budget");
  c_budget->add_option("--nu0", nu0)->required();
  c_budget->add_option("--mu", mu_param)->required();
  c_budget->add_option("--delta1", delta1);
  c_budget->add_option("--l0", l0);
  c_budget->add_option("--rho", rho);
  c_budget->add_option("--log-rho", log_rho);

  auto* c_update = app.add_subcommand("update", "quotient invariant update");
  c_update->add_option("--inj", inj_in);
  c_update->add_option("--a", a_in);
  c_update->add_option("--nu-stg", nu_stg);
  c_update->add_option("--mu", mu_param);
  c_update->add_option("--delta-bar", delta_bar)->required();
  c_update->add_option("--l0", l0);
  c_update->add_option("--ell", ell);
  c_update->add_flag("--ell-inf", ell_inf);

  auto* c_acyl = app.add_subcommand("acyl", "acylindricity bounds");
  c_acyl->add_option("--delta", delta_in)->required();
  c_acyl->add_option("--l", l_in)->required();
  c_acyl->add_option("--n", n_in)->required();
  c_acyl->add_option("--l0", l0);
  c_acyl->add_option("--d", d_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c_pieces->parsed()) {
    Presentation p = parse_presentation_file(file);
    auto sym = symmetrize(p.rank, p.relators);
    std::cout << "closure " << sym.closure.size() << "\nminlen " << sym.minlen << "\nmax_piece "
              << max_piece(sym) << "\n";
    return 0;
  }
  if (c_sc->parsed()) {
    Presentation p = parse_presentation_file(file);
    auto sym = symmetrize(p.rank, p.relators);
    bool ok = check_prime_condition(sym, parse_rat(lambda_text));
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? 0 : 1;
  }
  if (c_dehn->parsed()) {
    Presentation p = parse_presentation_file(file);
    auto sym = symmetrize(p.rank, p.relators);
    Word w = parse_word(p.rank, word_text);
    std::cout << to_string(dehn_reduce(w, sym)) << "\n";
    return 0;
  }
  if (c_ball->parsed()) {
    Presentation p = parse_presentation_file(file);
    auto sym = symmetrize(p.rank, p.relators);
    std::cout << ball_elements(sym, radius) << "\n";
    return 0;
  }
  if (c_delta->parsed()) {
    auto roots = enumerate_primitive_classes(rank, maxlen);
    std::cout << "classes " << roots.size() << "\ndelta " << cylinder_delta(roots) << "\n";
    return 0;
  }
  if (c_cert->parsed()) {
    SCCertificate c = level1_certificate(rank, exponent, maxlen, parse_rat(threshold_text));
    std::cout << emit_report(c);
    return c.pass ? 0 : 1;
  }
  if (c_cone->parsed()) {
    std::cout.precision(12);
    if (c_mu->parsed()) {
      std::cout << mu(t_in, rho) << "\n";
    } else if (c_dist->parsed()) {
      ConeParams params{rho, circ};
      std::cout << cone_dist(ConePoint{arc1, r1}, ConePoint{arc2, r2}, params) << "\n";
    } else if (c_omega->parsed()) {
      ComparisonCone d = comparison_cone(cone_n, ell0, rho);
      std::cout << "omega " << d.omega << "\nsc_regime " << (d.sc_regime ? "yes" : "no") << "\n";
      if (c_omega->count("--rot"))
        std::cout << "rotation_displacement "
                  << rotation_displacement(ConePoint{0.0, rho}, rot_k, cone_n, d.params) << "\n";
    } else {
      return 2;
    }
    return 0;
  }
  if (c_norm->parsed()) {
    ProductGroup g;
    g.dihedral_orders = parse_ints(orders_text);
    std::vector<ProductElt> gens;
    for (const auto& s : split(gens_text, '/')) gens.push_back(parse_product_elt(g, s));
    NormalizerReport r = normalizer_element(g, gens, parse_product_elt(g, h_text), n_param);
    std::cout << "a " << product_elt_str(r.a) << "\ncentralizes "
              << (r.centralizes_subgroup ? "yes" : "no") << "\ncommutators_central "
              << (r.commutators_central ? "yes" : "no") << "\n";
    return (r.centralizes_subgroup && r.commutators_central) ? 0 : 1;
  }
  if (c_chain->parsed()) {
    ProductGroup g;
    g.dihedral_orders = parse_ints(orders_text);
    Chain c = make_chain(g, parse_product_elt(g, g0_text), parse_product_elt(g, h_text), length);
    ChainVerdict v = chain_identity_check(g, c, mu_chain);
    std::cout << (v.ok ? "pass" : "fail") << "\n" << v.witness << "\n";
    return v.ok ? 0 : 1;
  }
  if (c_embed->parsed()) {
    FiniteGroupTable table = parse_group_table_file(file);
    std::vector<int> gens = parse_ints(gens_text);
    ProductGroup target;
    target.dihedral_orders.push_back(static_cast<int>(n_param));
    long long n2 = two_part(n_param);
    for (int i = 0; i < k_factors; ++i) target.dihedral_orders.push_back(static_cast<int>(n2));
    std::vector<ProductElt> images;
    for (const auto& s : split(images_text, '/')) images.push_back(parse_product_elt(target, s));
    EmbeddingVerdict v = burnside_subgroup_check(table, n_param, gens, k_factors, images);
    std::cout << (v.ok ? "pass" : "fail") << "\n";
    if (!v.ok) std::cout << v.witness << "\n";
    return v.ok ? 0 : 1;
  }
  if (c_cls->parsed()) {
    FreeProduct s = cyclic_product(parse_ints(cyclic_text));
    Classification c = classify(s, parse_gog(s, word_gog));
    std::cout << (c.type == IsomType::Loxodromic ? "loxodromic " : "elliptic ")
              << c.translation_length << "\n";
    return 0;
  }
  if (c_nu->parsed()) {
    FreeProduct s = cyclic_product(parse_ints(cyclic_text));
    NuScanReport r = nu_scan(s, bound, samples, seed);
    std::cout << "pairs " << r.pairs_checked << "\nchains_elementary " << r.chains_elementary
              << "\nviolations " << r.violations << "\nundecided " << r.undecided << "\n";
    return r.violations == 0 ? 0 : 1;
  }
  if (c_hnn->parsed()) {
    HnnWitness w = hnn_witness(m_chain);
    std::cout << "chain_property " << (w.chain_property ? "yes" : "no") << "\nindependent "
              << (w.images_independent ? "yes" : "no") << "\nsupports";
    for (auto s : w.staged_supports) std::cout << " " << s;
    std::cout << "\n";
    return (w.chain_property && w.images_independent) ? 0 : 1;
  }
  if (c_budget->parsed()) {
    Budget b;
    if (c_budget->count("--log-rho"))
      b = budget_compute_log(nu0, mu_param, std::log(delta1), std::log(l0), log_rho);
    else if (c_budget->count("--rho"))
      b = budget_compute(nu0, mu_param, delta1, l0, rho);
    else
      b = budget_compute_log(nu0, mu_param, std::log(delta1), std::log(l0),
                             std::log(1e20 * l0 * delta1) + 1.0);
    std::cout << "log_C0 " << b.log_C0 << "\nlog_C1 " << b.log_C1 << "\nlog_kappa " << b.log_kappa
              << "\nlog_N0 " << b.log_N0 << "\n";
    if (b.N0) std::cout << "N0 " << *b.N0 << "\n";
    std::cout << "slack";
    for (double s : b.slack) std::cout << " " << s;
    std::cout << "\n";
    if (b.divisor) std::cout << "divisor " << *b.divisor << "\n";
    return 0;
  }
  if (c_update->parsed()) {
    double e = ell_inf ? std::numeric_limits<double>::infinity() : ell;
    QuotientUpdate u = quotient_update(inj_in, a_in, nu_stg, mu_param, delta_bar, l0, e);
    std::cout << "inj " << u.inj << "\nA " << u.A << "\nnu " << u.nu << "\n";
    return 0;
  }
  if (c_acyl->parsed()) {
    AcylBounds b = acyl_bounds(delta_in, l_in, n_in, l0, d_in);
    std::cout << "inj_lower " << b.inj_lower << "\nnu_upper " << b.nu_upper << "\nA_upper "
              << b.A_upper << "\nL_of_d " << b.L_of_d << "\nN_of_d " << b.N_of_d << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
