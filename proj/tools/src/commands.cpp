#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "bolalg/bolalg.hpp"
#include "bolalg_cli/cli.hpp"

namespace bolalg::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Invocation {
  std::string name;
  std::vector<std::string> files;
  std::string profile = "consistent";
  std::string mode;
  std::string scheme = "lts-standard";
  std::string form;
  std::string format = "human";
  std::string expr_file;
  std::string builtin;
  std::string out;
  std::string op;
  std::vector<std::string> vecs;
  std::vector<std::string> hvecs;
  std::vector<std::string> binds;
  bool strict = false;
};

using Handler = std::function<void(const Invocation&, CommandReport&)>;

struct Command {
  std::string name;
  std::string help;
  std::size_t min_files;
  std::size_t max_files;
  std::string files_help;
  Handler run;
};

// ---------------------------------------------------------------- helpers

BolAlgebra load_bol(const std::string& path) { return parse_bol_algebra(read_file(path)); }
LieAlgebra load_lie(const std::string& path) { return parse_lie_algebra(read_file(path)); }
BolModule load_module(const std::string& path) { return parse_module(read_file(path)); }
Matrix load_map(const std::string& path) { return parse_map(read_file(path)); }

void write_out(const Invocation& inv, CommandReport& rep, const std::string& text) {
  if (inv.out.empty()) return;
  std::ofstream f(inv.out, std::ios::binary);
  if (!f) throw Error("cannot write '" + inv.out + "'");
  f << text;
  rep.fact("written", inv.out);
}

Profile profile_of(const Invocation& inv) {
  if (inv.profile == "consistent") return Profile::consistent;
  if (inv.profile == "literal") return Profile::literal;
  throw UsageError("--profile must be literal or consistent");
}

IdealMode ideal_mode_of(const Invocation& inv, IdealMode fallback) {
  if (inv.mode.empty()) return fallback;
  if (inv.mode == "literal") return IdealMode::literal;
  if (inv.mode == "strong") return IdealMode::strong;
  throw UsageError("--mode must be literal or strong");
}

AxiomForm form_of(const Invocation& inv) {
  if (inv.form.empty() || inv.form == "normalized") return AxiomForm::normalized;
  if (inv.form == "printed") return AxiomForm::printed;
  throw UsageError("--form must be normalized or printed");
}

EnvelopeScheme scheme_of(const Invocation& inv) {
  if (inv.scheme == "lts-standard") return EnvelopeScheme::lts_standard;
  if (inv.scheme == "printed") return EnvelopeScheme::printed;
  throw UsageError("--scheme must be lts-standard or printed");
}

std::vector<Vector> vectors(const std::vector<std::string>& texts, std::size_t dim) {
  std::vector<Vector> out;
  for (const auto& t : texts) {
    Vector v = parse_vector(t);
    if (v.size() != dim)
      throw UsageError("vector '" + t + "' has " + std::to_string(v.size()) +
                       " components, expected " + std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace span_of(const std::vector<std::string>& texts, std::size_t dim) {
  return Subspace::span(dim, vectors(texts, dim));
}

void verdict(CommandReport& rep, const std::string& name, const Verdict& v) {
  rep.add(Check{name, v.holds, v.witness, {}});
}

void boolean(CommandReport& rep, const std::string& name, bool ok, const std::string& detail = {}) {
  Check c{name, ok, std::nullopt, {}};
  if (!ok && !detail.empty()) c.witness = Witness{{}, {}, detail};
  rep.add(std::move(c));
}

std::string basis_text(const Subspace& s) {
  if (s.dim() == 0) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? " " : "") + bolalg::to_string(s.basis_vector(i));
  return out;
}

std::string matrix_fact(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? " " : "") + bolalg::to_string(m.row(r));
  return out.empty() ? "[]" : out;
}

Morphism morphism_from(const Invocation& inv, std::size_t map_file = 2) {
  return Morphism(load_bol(inv.files[0]), load_bol(inv.files[1]), load_map(inv.files[map_file]));
}

void require_morphism(CommandReport& rep, const Morphism& f, const std::string& name = "is-morphism") {
  const Verdict v = is_morphism(f);
  verdict(rep, name, v);
}

// ---------------------------------------------------------------- handlers

void cmd_check(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  rep.fact("dim", std::to_string(a.dim()));
  rep.fact("profile", inv.profile);
  rep.add(check_axioms(a, profile_of(inv)));
}

void cmd_lts(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  rep.fact("dim", std::to_string(a.dim()));
  rep.fact("profile", inv.profile);
  rep.add(check_lts(a, profile_of(inv)));
}

void cmd_ideal(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const Subspace s = span_of(inv.vecs, a.dim());
  rep.fact("subspace", basis_text(s));
  verdict(rep, "ideal", is_ideal(a, s, ideal_mode_of(inv, IdealMode::literal)));
}

void cmd_closure(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const IdealMode mode = ideal_mode_of(inv, IdealMode::literal);
  const Subspace x = span_of(inv.vecs, a.dim());
  const Subspace c = ideal_closure(a, x, mode);
  rep.fact("dim", std::to_string(c.dim()));
  rep.fact("closure", basis_text(c));
  boolean(rep, "contains-generators", c.contains(x));
  verdict(rep, "is-ideal", is_ideal(a, c, mode));
}

void cmd_quotient(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const Subspace i = span_of(inv.vecs, a.dim());
  try {
    const Quotient q = quotient(a, i, ideal_mode_of(inv, IdealMode::literal));
    rep.fact("dim", std::to_string(q.algebra.dim()));
    rep.fact("projection", matrix_fact(q.projection.matrix()));
    boolean(rep, "quotient", true);
    require_morphism(rep, q.projection, "projection-is-morphism");
    write_out(inv, rep, format_algebra(q.algebra));
  } catch (const QuotientError& e) {
    rep.add(Check{"quotient", false, e.witness(), e.kind()});
  }
}

void cmd_morph(const Invocation& inv, CommandReport& rep) {
  require_morphism(rep, morphism_from(inv));
}

void cmd_kernel(const Invocation& inv, CommandReport& rep) {
  const Morphism f = morphism_from(inv);
  const Verdict m = is_morphism(f);
  verdict(rep, "is-morphism", m);
  if (!m) return;
  const KernelImage ki = kernel_image(f);
  rep.fact("kernel", basis_text(ki.kernel));
  rep.fact("image", basis_text(ki.image));
  verdict(rep, "kernel-is-ideal", ki.kernel_is_ideal);
  verdict(rep, "image-is-subalgebra", ki.image_is_subalgebra);
  boolean(rep, "rank-nullity", ki.kernel.dim() + ki.image.dim() == f.source().dim());
}

void cmd_iso(const Invocation& inv, CommandReport& rep) {
  const Morphism f = morphism_from(inv);
  const Verdict m = is_morphism(f);
  verdict(rep, "is-morphism", m);
  if (!m) return;
  const FirstIso iso = first_iso(f);
  rep.fact("induced", matrix_fact(iso.induced.matrix()));
  rep.fact("dim", std::to_string(iso.induced.source().dim()));
  boolean(rep, "bijective", iso.bijective);
  verdict(rep, "induced-is-morphism", iso.morphism);
  write_out(inv, rep, format_map(iso.induced.matrix()));
}

void cmd_product(const Invocation& inv, CommandReport& rep) {
  std::vector<BolAlgebra> factors;
  for (const auto& f : inv.files) factors.push_back(load_bol(f));
  const Product p = product(factors);
  rep.fact("dim", std::to_string(p.algebra.dim()));
  for (std::size_t i = 0; i < p.projections.size(); ++i) {
    require_morphism(rep, p.projections[i], "projection-" + std::to_string(i + 1));
    require_morphism(rep, p.injections[i], "injection-" + std::to_string(i + 1));
  }
  write_out(inv, rep, format_algebra(p.algebra));
}

void cmd_equalizer(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra s = load_bol(inv.files[0]), t = load_bol(inv.files[1]);
  const Morphism f(s, t, load_map(inv.files[2])), g(s, t, load_map(inv.files[3]));
  const Verdict vf = is_morphism(f), vg = is_morphism(g);
  verdict(rep, "f-is-morphism", vf);
  verdict(rep, "g-is-morphism", vg);
  if (!vf || !vg) return;
  const Equalizer eq = equalizer(f, g);
  rep.fact("dim", std::to_string(eq.subspace.dim()));
  rep.fact("subspace", basis_text(eq.subspace));
  verdict(rep, "subalgebra", eq.closed);
  require_morphism(rep, eq.inclusion, "inclusion-is-morphism");
  boolean(rep, "f∘e=g∘e", eq.commutes);
  write_out(inv, rep, format_algebra(eq.algebra));
}

void cmd_coequalizer(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra s = load_bol(inv.files[0]), t = load_bol(inv.files[1]);
  const Morphism f(s, t, load_map(inv.files[2])), g(s, t, load_map(inv.files[3]));
  CoequalizerMode mode = CoequalizerMode::difference;
  if (inv.mode == "images") mode = CoequalizerMode::images;
  else if (!inv.mode.empty() && inv.mode != "difference")
    throw UsageError("--mode must be images or difference");
  const Verdict vf = is_morphism(f), vg = is_morphism(g);
  verdict(rep, "f-is-morphism", vf);
  verdict(rep, "g-is-morphism", vg);
  if (!vf || !vg) return;
  try {
    const Coequalizer c = coequalizer(f, g, mode);
    rep.fact("mode", mode == CoequalizerMode::images ? "images" : "difference");
    rep.fact("ideal", basis_text(c.ideal));
    rep.fact("dim", std::to_string(c.algebra.dim()));
    require_morphism(rep, c.projection, "projection-is-morphism");
    boolean(rep, "p∘f=p∘g", c.commutes);
    write_out(inv, rep, format_algebra(c.algebra));
  } catch (const QuotientError& e) {
    rep.add(Check{"quotient", false, e.witness(), e.kind()});
  }
}

void cmd_pder(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const PDerSolution s = pder_solve(a);
  rep.fact("pair-space-ambient", std::to_string(a.dim() * a.dim() + a.dim()));
  rep.fact("pair-space-dim", std::to_string(s.pair_space.dim()));
  rep.fact("pairs-imposed", s.skew_pairs_only ? "i<j" : "all");
  bool ok = true;
  for (std::size_t b = 0; b < s.pair_space.dim() && ok; ++b) {
    const auto [d, z] = unpack_pair(a.dim(), s.pair_space.basis_vector(b));
    ok = is_pseudo_derivation(a, d, z).holds;
  }
  boolean(rep, "basis-satisfies-identity", ok);
  std::string rows;
  for (std::size_t b = 0; b < s.pair_space.dim(); ++b) {
    const Vector v = s.pair_space.basis_vector(b);
    for (std::size_t i = 0; i < v.size(); ++i) rows += (i ? " " : "") + bolalg::to_string(v[i]);
    rows += '\n';
  }
  write_out(inv, rep, rows);
}

void cmd_companions(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const Matrix d = load_map(inv.files[1]);
  const CompanionSet c = companions_of(a, d);
  rep.fact("defined", c.defined ? "yes" : "no");
  boolean(rep, "companion-exists", c.defined, "D is not a pseudo-derivation for any z");
  if (!c.defined) return;
  rep.fact("particular", bolalg::to_string(c.particular));
  rep.fact("homogeneous", basis_text(c.homogeneous));
  bool ok = is_pseudo_derivation(a, d, c.particular).holds;
  for (std::size_t b = 0; b < c.homogeneous.dim() && ok; ++b)
    ok = is_pseudo_derivation(a, d, c.particular + c.homogeneous.basis_vector(b)).holds;
  boolean(rep, "members-satisfy-identity", ok);
}

void cmd_inner(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const Subspace inner = inner_pder_span(a);
  rep.fact("dim", std::to_string(inner.dim()));
  rep.fact("span", basis_text(inner));
  boolean(rep, "contained-in-pder", pder_solve(a).pair_space.contains(inner));
}

void cmd_dmatrix(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const auto v = vectors(inv.vecs, a.dim());
  if (v.size() != 2) throw UsageError("dmatrix needs exactly two --vec arguments");
  const Matrix d = d_matrix(a, v[0], v[1]);
  rep.fact("matrix", matrix_fact(d));
  write_out(inv, rep, format_map(d));
}

void cmd_regrep(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const BolModule v = regular_module(a);
  rep.fact("moddim", std::to_string(v.mod_dim()));
  rep.add(check_module(a, v, form_of(inv)));
  write_out(inv, rep, format_module(v));
}

void cmd_modcheck(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  rep.add(check_module(a, load_module(inv.files[1]), form_of(inv)));
}

void cmd_pcheck(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const BolModule v = load_module(inv.files[1]);
  // p2 contradicts p3 on most modules, so like the composite it is reported
  // rather than asserted.
  const Report props = check_p_properties(a, v, form_of(inv));
  for (const auto& c : props.checks()) {
    if (c.name != module_axiom::p2) {
      rep.add(c);
      continue;
    }
    std::string value = c.passed ? "holds" : "fails";
    if (c.witness) value += " at (" + std::to_string(c.witness->indices[0]) + "," +
                            std::to_string(c.witness->indices[1]) + ")";
    rep.fact("p2", value);
  }
  for (auto [form, label] : {std::pair{CompositeForm::literal, "composite-literal"},
                             std::pair{CompositeForm::derived, "composite-derived"}}) {
    const Report r = check_prop_composite(a, v, form);
    rep.fact(label, r.passed() ? "holds" : "fails");
  }
}

void cmd_extension(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const Extension e = extension_algebra(a, load_module(inv.files[1]), profile_of(inv),
                                        ideal_mode_of(inv, IdealMode::literal));
  rep.fact("dim", std::to_string(e.algebra.dim()));
  rep.add(e.report);
  write_out(inv, rep, format_algebra(e.algebra));
}

void cmd_dual(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const BolModule v = load_module(inv.files[1]);
  const DualVariant variant = inv.strict ? DualVariant::strict : DualVariant::repaired;
  const BolModule d = dual_module(a, v, variant);
  boolean(rep, "involution", dual_module(a, d, variant) == v);
  rep.add(check_module(a, d, form_of(inv)), "dual:");
  write_out(inv, rep, format_module(d));
}

void cmd_opposite(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  if (inv.files.size() == 1) {
    OppositeVariant variant = OppositeVariant::section2;
    if (inv.mode == "theorem") variant = OppositeVariant::theorem;
    else if (!inv.mode.empty() && inv.mode != "section2")
      throw UsageError("--mode must be section2 or theorem");
    const BolAlgebra op = opposite(a, variant);
    rep.fact("variant", variant == OppositeVariant::theorem ? "theorem" : "section2");
    if (variant == OppositeVariant::theorem) {
      boolean(rep, "involution", opposite(op, variant) == a);
    } else {
      // Three cyclic shifts with a sign each: the net effect is -t and -c.
      const BolAlgebra cube = opposite(opposite(op, variant), variant);
      boolean(rep, "cube-is-negation", cube == opposite(a, OppositeVariant::theorem));
    }
    // The opposite is a right Bol algebra, so the left-profile axioms are
    // informational here.
    const Report ax = check_axioms(op, profile_of(inv));
    for (const auto& ch : ax.checks()) rep.fact("opposite:" + ch.name, ch.passed ? "holds" : "fails");
    write_out(inv, rep, format_algebra(op));
    return;
  }
  const BolModule v = load_module(inv.files[1]);
  const BolModule op = opposite_rep(a, v);
  boolean(rep, "involution", opposite_rep(a, op) == v);
  const Report p = check_p_properties(opposite(a, OppositeVariant::section2), op, form_of(inv));
  for (const auto& c : p.checks()) rep.fact("opposite:" + c.name, c.passed ? "holds" : "fails");
  write_out(inv, rep, format_module(op));
}

Identity identity_of(const Invocation& inv) {
  if (!inv.builtin.empty() && !inv.expr_file.empty())
    throw UsageError("give either --expr-file or --builtin, not both");
  if (!inv.builtin.empty()) return builtin_identity(inv.builtin, form_of(inv));
  if (inv.expr_file.empty()) throw UsageError("identity needs --expr-file or --builtin");
  return parse_identity(read_file(inv.expr_file));
}

void cmd_identity(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const BolModule v = load_module(inv.files[1]);
  const Identity id = identity_of(inv);
  rep.fact("identity", bolalg::to_string(id));
  rep.fact("dual", bolalg::to_string(dualize_identity(id)));
  if (!inv.binds.empty()) {
    Environment env;
    for (const auto& b : inv.binds) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) throw UsageError("--bind expects NAME=vector");
      env[b.substr(0, eq)] = vectors({b.substr(eq + 1)}, a.dim())[0];
    }
    const IdentityResult r = check_identity(a, v, id, env);
    rep.fact("complete", r.complete ? "yes" : "no");
    rep.add(Check{"identity", r.holds, r.witness, "binding"});
    return;
  }
  const IdentityResult r = check_identity(a, v, id);
  rep.fact("bindings", std::to_string(r.bindings));
  rep.fact("complete", r.complete ? "yes" : "no");
  rep.add(Check{"identity", r.holds, r.witness, "exhaustive"});
  const DualityRoundTrip rt = duality_roundtrip(a, v, id);
  rep.fact("dual-on-opposite", rt.dual_opposite.holds ? "holds" : "fails");
  if (rt.asserted) boolean(rep, "duality-roundtrip", rt.agree(), "verdicts of I and I* differ");
}

void cmd_envelope(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const EnvelopingAlgebra e = build_envelope(a, scheme_of(inv));
  rep.fact("base-dim", std::to_string(a.dim()));
  rep.fact("total-dim", std::to_string(e.total.dim()));
  rep.add(verify_envelope(e));
  write_out(inv, rep, format_envelope(e));
}

void cmd_roundtrip(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  try {
    const RoundTrip rt = roundtrip(a, scheme_of(inv));
    boolean(rep, "preconditions", true);
    rep.add(rt.report);
    write_out(inv, rep, format_algebra(rt.recovered));
  } catch (const RoundTripError& e) {
    Check c = e.failed();
    c.note = "precondition " + c.name;
    c.name = "preconditions";
    rep.add(std::move(c));
    rep.message = e.what();
  }
}

void cmd_frompair(const Invocation& inv, CommandReport& rep) {
  const LieAlgebra g = load_lie(inv.files[0]);
  const Subspace b = span_of(inv.vecs, g.dim()), h = span_of(inv.hvecs, g.dim());
  const Report pre = lie_pair_preconditions(g, b, h);
  rep.add(pre);
  if (!pre.passed()) return;
  const BolAlgebra out = from_lie_pair(g, b, h);
  rep.fact("dim", std::to_string(out.dim()));
  rep.add(check_axioms(out, profile_of(inv)), "result:");
  write_out(inv, rep, format_algebra(out));
}

void cmd_fromlie(const Invocation& inv, CommandReport& rep) {
  const LieAlgebra g = load_lie(inv.files[0]);
  const Report jac = jacobi_check(g);
  rep.add(jac);
  if (!jac.passed()) return;
  const BolAlgebra out = from_lie_algebra(g);
  rep.add(check_axioms(out, profile_of(inv)), "result:");
  write_out(inv, rep, format_algebra(out));
}

void cmd_dsum(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  const BolModule v = load_module(inv.files[1]), w = load_module(inv.files[2]);
  const BolModule s = direct_sum(v, w);
  rep.fact("moddim", std::to_string(s.mod_dim()));
  const AxiomForm form = form_of(inv);
  const Report rv = check_module(a, v, form), rw = check_module(a, w, form), rs = check_module(a, s, form);
  for (const auto& c : rs.checks()) {
    const bool both = rv.passed(c.name) && rw.passed(c.name);
    rep.fact("sum:" + c.name, c.passed ? "holds" : "fails");
    boolean(rep, "preserved:" + c.name, !both || c.passed);
  }
  write_out(inv, rep, format_module(s));
}

void cmd_eval(const Invocation& inv, CommandReport& rep) {
  const BolAlgebra a = load_bol(inv.files[0]);
  Operation op;
  if (inv.op == "binary") op = Operation::binary;
  else if (inv.op == "ternary") op = Operation::ternary;
  else if (inv.op == "d") op = Operation::d_operator;
  else if (inv.op == "delta") op = Operation::delta_operator;
  else throw UsageError("--op must be binary, ternary, d or delta");
  const auto args = vectors(inv.vecs, a.dim());
  rep.fact("result", bolalg::to_string(evaluate(a, op, args)));
}

const std::vector<Command>& table() {
  static const std::vector<Command> commands = {
      {"check", "axioms (i)-(iv) and binary skewness", 1, 1, "ALG", cmd_check},
      {"lts", "ternary identities only", 1, 1, "ALG", cmd_lts},
      {"ideal", "is span(--vec) an ideal", 1, 1, "ALG", cmd_ideal},
      {"closure", "ideal generated by span(--vec)", 1, 1, "ALG", cmd_closure},
      {"quotient", "quotient by span(--vec)", 1, 1, "ALG", cmd_quotient},
      {"morph", "is the map a morphism", 3, 3, "SRC TGT MAP", cmd_morph},
      {"kernel", "kernel and image of a morphism", 3, 3, "SRC TGT MAP", cmd_kernel},
      {"iso", "first isomorphism theorem", 3, 3, "SRC TGT MAP", cmd_iso},
      {"product", "direct product of algebras", 1, 64, "ALG...", cmd_product},
      {"equalizer", "equalizer of two morphisms", 4, 4, "SRC TGT F G", cmd_equalizer},
      {"coequalizer", "coequalizer of two morphisms", 4, 4, "SRC TGT F G", cmd_coequalizer},
      {"pder", "pseudo-derivation pair space", 1, 1, "ALG", cmd_pder},
      {"companions", "companion set Com(D)", 2, 2, "ALG MAP", cmd_companions},
      {"inner", "inner pseudo-derivation span", 1, 1, "ALG", cmd_inner},
      {"dmatrix", "matrix of x -> (x;a,b)", 1, 1, "ALG", cmd_dmatrix},
      {"regrep", "regular module", 1, 1, "ALG", cmd_regrep},
      {"modcheck", "module axioms (1)-(5)", 2, 2, "ALG MOD", cmd_modcheck},
      {"pcheck", "properties p1-p5", 2, 2, "ALG MOD", cmd_pcheck},
      {"extension", "split extension B + V", 2, 2, "ALG MOD", cmd_extension},
      {"dsum", "direct sum of modules", 3, 3, "ALG MOD MOD", cmd_dsum},
      {"dual", "dual module", 2, 2, "ALG MOD", cmd_dual},
      {"opposite", "opposite algebra or representation", 1, 2, "ALG [MOD]", cmd_opposite},
      {"identity", "check an operator identity", 2, 2, "ALG MOD", cmd_identity},
      {"envelope", "enveloping Lie algebra", 1, 1, "ALG", cmd_envelope},
      {"roundtrip", "envelope then Lie pair", 1, 1, "ALG", cmd_roundtrip},
      {"frompair", "Bol algebra from a Lie pair", 1, 1, "LIE", cmd_frompair},
      {"fromlie", "Bol algebra from a Lie algebra", 1, 1, "LIE", cmd_fromlie},
      {"eval", "evaluate an operation", 1, 1, "ALG", cmd_eval},
  };
  return commands;
}

}  // namespace

std::vector<std::string> subcommand_names() {
  std::vector<std::string> out;
  for (const auto& c : table()) out.push_back(c.name);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for Bol algebras", "bolalg"};
  app.require_subcommand(1);
  Invocation inv;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& cmd : table()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("files", inv.files, cmd.files_help)
        ->expected(static_cast<int>(cmd.min_files), static_cast<int>(cmd.max_files))
        ->required(cmd.min_files > 0);
    sub->add_option("--profile", inv.profile, "literal | consistent");
    sub->add_option("--mode", inv.mode, "ideal, coequalizer or opposite variant");
    sub->add_option("--scheme", inv.scheme, "lts-standard | printed");
    sub->add_option("--form", inv.form, "normalized | printed");
    sub->add_option("--format", inv.format, "human | machine");
    sub->add_option("--expr-file", inv.expr_file, "identity expression file");
    sub->add_option("--builtin", inv.builtin, "built-in identity p1..p5");
    sub->add_option("--out", inv.out, "write the constructed object here");
    sub->add_option("--op", inv.op, "binary | ternary | d | delta");
    sub->add_option("--vec", inv.vecs, "comma-separated rationals (repeatable)");
    sub->add_option("--hvec", inv.hvecs, "complement subspace vector (frompair)");
    sub->add_option("--bind", inv.binds, "NAME=vector binding (identity)");
    sub->add_flag("--strict", inv.strict, "printed R* in the dual module");
    subs.emplace_back(sub, &cmd);
  }

  CommandReport rep;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    rep.status = Status::error;
    rep.command = argc > 1 ? argv[1] : "";
    rep.message = e.what();
    // The format option may not have been parsed; look for it directly.
    Format format = Format::human;
    for (int i = 1; i + 1 < argc; ++i)
      if (std::string_view(argv[i]) == "--format" && std::string_view(argv[i + 1]) == "machine")
        format = Format::machine;
    out << emit_report(rep, format);
    return 2;
  }

  const Command* chosen = nullptr;
  for (auto& [sub, cmd] : subs)
    if (sub->parsed()) chosen = cmd;
  rep.command = chosen->name;
  Format format = Format::human;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (inv.format == "machine") format = Format::machine;
    else if (inv.format != "human") throw UsageError("--format must be human or machine");
    chosen->run(inv, rep);
    rep.settle();
  } catch (const std::exception& e) {
    rep.status = Status::error;
    rep.message = e.what();
  }
  rep.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << emit_report(rep, format);
  if (rep.status == Status::error) err << "bolalg " << rep.command << ": " << rep.message << '\n';
  return exit_code(rep.status);
}

}  // namespace bolalg::cli
