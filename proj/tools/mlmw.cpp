// mlmw -- finite-algebra workbench for monadic n x m valued
// Lukasiewicz-Moisil algebras: axiom checking, quantifier and congruence
// enumeration, duality round trips, functional representations, and a
// theorem-to-check trace over algebra documents.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mlmw/congruence.hpp"
#include "mlmw/duality.hpp"
#include "mlmw/fixtures.hpp"
#include "mlmw/io.hpp"
#include "mlmw/lm.hpp"
#include "mlmw/quantifier.hpp"
#include "mlmw/representation.hpp"

namespace {

using namespace mlmw;

constexpr int kExitPass = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitStructural = 2;
constexpr int kExitCap = 3;

struct Options {
  Caps caps;
  bool structured = false;
};

struct Row {
  std::string key;
  std::string status;  // pass | fail | skip | info
  std::string detail;
};

struct Output {
  std::vector<Row> rows;
  bool failed = false;

  void law_report(const std::string& key, const Report& r) {
    if (r.ok()) {
      rows.push_back({key, "pass", ""});
      return;
    }
    failed = true;
    for (const auto& v : r.items) rows.push_back({key, "fail", v.law + " " + v.detail});
  }
  void pass(const std::string& key, const std::string& detail = "") {
    rows.push_back({key, "pass", detail});
  }
  void fail(const std::string& key, const std::string& detail = "") {
    failed = true;
    rows.push_back({key, "fail", detail});
  }
  void skip(const std::string& key, const std::string& detail) {
    rows.push_back({key, "skip", detail});
  }
  void info(const std::string& key, const std::string& detail) {
    rows.push_back({key, "info", detail});
  }

  int print(const Options& opt) const {
    for (const Row& r : rows) {
      if (opt.structured) {
        std::cout << r.key << "=" << r.status;
        if (!r.detail.empty()) std::cout << " detail=" << r.detail;
        std::cout << "\n";
      } else if (r.status == "info") {
        std::cout << r.key << ": " << r.detail << "\n";
      } else {
        std::cout << r.key << ": " << r.status;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
      }
    }
    std::cout << (opt.structured ? "result=" : "result: ")
              << (failed ? "fail" : "pass") << "\n";
    return failed ? kExitLawFailure : kExitPass;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path);
  out << text;
}

// Signals that the report has already been printed.
struct EarlyExit {
  int code;
};

// Loads an algebra document; lattice-law defects are reported on `out` and
// signalled by a null return (exit 1 path), shape defects throw.
std::optional<FiniteAlgebra> load_algebra(const std::string& path,
                                          Output& out) {
  AlgebraDocument doc = parse_algebra_document(read_file(path));
  BuildResult built = algebra_from_document(doc);
  if (!built.algebra) {
    out.law_report("document-lattice", built.problems);
    return std::nullopt;
  }
  return built.algebra;
}

// Commands past `check` assume a valid algebra; violations exit 1 up front.
FiniteAlgebra require_algebra(const std::string& path, Output& out,
                              const Options& opt) {
  auto L = load_algebra(path, out);
  if (!L) throw EarlyExit{out.print(opt)};
  Report shape = L->check_shape();
  if (!shape.ok()) throw StructuralError(shape.items.front().detail);
  Report laws = check_de_morgan(*L);
  laws.merge(check_lm_axioms(*L));
  if (!laws.ok()) {
    out.law_report("axioms", laws);
    throw EarlyExit{out.print(opt)};
  }
  return *L;
}

FiniteAlgebra require_monadic(const std::string& path, Output& out,
                              const Options& opt) {
  FiniteAlgebra L = require_algebra(path, out, opt);
  if (!L.has_exists())
    throw StructuralError("document has no exists table");
  Report q = check_quantifier(L, *L.exists);
  if (!q.ok()) {
    out.law_report("quantifier", q);
    throw EarlyExit{out.print(opt)};
  }
  return L;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_fixture(const std::string& name, const std::string& out_path) {
  FiniteAlgebra L = fixture(name);
  std::string text = emit_algebra_document(
      document_from_algebra(L, {{"fixture", name}}));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitPass;
}

int cmd_check(const std::string& path, const Options& opt) {
  Output out;
  std::string text = read_file(path);
  if (detect_kind(text) == DocumentKind::space) {
    SpaceDocument doc = parse_space_document(text);
    MlmSpace X = space_from_document(doc);
    out.law_report("space-laws", check_mlm_space(X, opt.caps));
    out.info("ml2", "auto-pass: equivalence classes are closed in the "
                    "discrete finite topology");
    return out.print(opt);
  }
  auto L = load_algebra(path, out);
  if (!L) return out.print(opt);
  Report shape = L->check_shape();
  if (!shape.ok()) throw StructuralError(shape.items.front().detail);
  out.law_report("lattice", validate_lattice(L->meet, L->join, L->leq));
  out.law_report("de-morgan", check_de_morgan(*L));
  out.law_report("lm-axioms", check_lm_axioms(*L));
  if (L->has_exists())
    out.law_report("quantifier", check_quantifier(*L, *L->exists));
  else
    out.skip("quantifier", "no exists table");
  return out.print(opt);
}

int cmd_quantifiers(const std::string& path, const Options& opt) {
  Output out;
  FiniteAlgebra L = require_algebra(path, out, opt);
  auto quants = enumerate_quantifiers(L, opt.caps);
  out.info("quantifiers", std::to_string(quants.size()));
  for (size_t k = 0; k < quants.size(); ++k) {
    std::string row;
    for (int x = 0; x < L.size(); ++x) {
      if (x) row += " ";
      row += L.name(quants[k](x));
    }
    out.info("quantifier " + std::to_string(k), row);
  }
  // the Moore-family correspondence is only a partial converse: record the
  // subsets that satisfy every condition except the sigma exchange
  auto gaps = partial_converse_gaps(L, opt.caps);
  out.info("partial-converse-gaps", std::to_string(gaps.size()));
  for (const ElementSet& g : gaps)
    out.info("gap", g.to_string(L.carrier));
  return out.print(opt);
}

int cmd_congruences(const std::string& path, const Options& opt) {
  Output out;
  FiniteAlgebra L = require_monadic(path, out, opt);
  CongruenceCount count = count_congruences(L, opt.caps);
  CongruenceLattice lat = all_congruences(L, opt.caps);
  out.info("congruences",
           "congruences=" + std::to_string(lat.size()) +
               " atoms=" + std::to_string(count.atoms));
  out.law_report("count-identity", count.report);
  for (int k = 0; k < lat.size(); ++k) {
    std::string blocks;
    for (const ElementSet& b : lat.elements[k].blocks()) {
      if (!blocks.empty()) blocks += " ";
      blocks += b.to_string(L.carrier);
    }
    out.info("congruence " + std::to_string(k), blocks);
  }
  return out.print(opt);
}

int cmd_spectrum(const std::string& path, const Options& opt,
                 const std::string& emit_path) {
  Output out;
  FiniteAlgebra L = require_monadic(path, out, opt);
  Spectrum spec = spectrum(L, opt.caps);
  const MlmSpace& X = spec.space;
  out.info("points", std::to_string(X.size()));
  for (int p = 0; p < X.size(); ++p)
    out.info("point " + X.points.name(p),
             spec.point_filters[p].to_string(L.carrier));
  std::string grows;
  for (int p = 0; p < X.size(); ++p) {
    if (p) grows += " ";
    grows += X.points.name(X.g(p));
  }
  out.info("g", grows);
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j) {
      std::string frow;
      for (int p = 0; p < X.size(); ++p) {
        if (p) frow += " ";
        frow += X.points.name(X.fi(i, j, p));
      }
      out.info("f " + std::to_string(i) + " " + std::to_string(j), frow);
    }
  out.info("eblocks", std::to_string(X.E.num_blocks()));
  out.law_report("space-laws", check_mlm_space(X, opt.caps));
  if (!emit_path.empty())
    write_file(emit_path, emit_space_document(document_from_space(
                              X, {{"source", path}})));
  return out.print(opt);
}

int cmd_duality_roundtrip(const std::string& path, const Options& opt) {
  Output out;
  AlgebraRef L = share(require_monadic(path, out, opt));
  RoundtripCertificate cert = roundtrip_check(L, opt.caps);
  if (cert.report.ok()) {
    for (int x = 0; x < L->size(); ++x)
      out.info("iso " + L->name(x), cert.dual->name(cert.iso(x)));
  }
  out.law_report("roundtrip", cert.report);
  SemimodalAnalysis an = closed_semimodal_sets(*L, opt.caps);
  out.info("semimodal-sets", std::to_string(an.sets.size()));
  out.law_report("congruence-subsets", an.report);
  return out.print(opt);
}

int cmd_represent(const std::string& path, const std::string& which,
                  const Options& opt) {
  Output out;
  AlgebraRef L = share(require_monadic(path, out, opt));
  if (which == "tau") {
    TauResult tau = tau_embedding(L, opt.caps);
    out.info("target-size", std::to_string(tau.target->size()));
    out.info("surjective", tau.surjective ? "yes" : "no");
    out.info("centred", is_centred(*L) ? "yes" : "no");
    out.law_report("tau", tau.report);
  } else if (which == "omega") {
    OmegaResult om = omega_embedding(L, opt.caps);
    out.info("constants", std::to_string(om.consts.size()));
    out.info("target-size", std::to_string(om.target->size()));
    out.law_report("omega", om.report);
  } else if (which == "psi") {
    PsiResult psi = psi_embedding(L, opt.caps);
    out.info("constants", std::to_string(psi.consts.size()));
    out.info("target-size", std::to_string(psi.target->size()));
    out.law_report("psi", psi.report);
  } else if (which == "diagram") {
    out.law_report("commuting-diagram", commuting_diagram_check(L, opt.caps));
  } else {
    throw StructuralError("unknown representation: " + which);
  }
  return out.print(opt);
}

int cmd_trace(const std::string& path, const Options& opt) {
  Output out;
  AlgebraRef L = share(require_monadic(path, out, opt));
  auto anchor = [&](const std::string& name, auto&& fn) {
    try {
      Report r = fn();
      if (r.ok())
        out.pass(name);
      else
        out.fail(name, r.items.front().law + " " + r.items.front().detail);
    } catch (const RejectedInput& e) {
      out.skip(name, e.what());
    } catch (const InternalCheckError& e) {
      out.fail(name, e.what());
    }
  };

  anchor("lattice-demorgan", [&] { return check_de_morgan(*L); });
  anchor("lm-axioms", [&] { return check_lm_axioms(*L); });
  anchor("difference-laws", [&] {
    Report r;
    ElementSet center = boolean_center(*L);
    for (int a = 0; a < L->size(); ++a)
      for (int b = 0; b < L->size(); ++b) {
        int d = delta(*L, a, b);
        if ((d == L->top) != (a == b)) r.add_once("T1", L->name(a));
        if (delta(*L, b, a) != d) r.add_once("T2", L->name(a));
        if (L->mt(d, a) != L->mt(d, b)) r.add_once("T3", L->name(a));
        if (b == L->top && d != L->sig(1, 1, a)) r.add_once("T4", L->name(a));
        for (int i = 1; i < L->n; ++i)
          for (int j = 1; j < L->m; ++j)
            if (L->sig(i, j, d) != d) r.add_once("T5", L->name(a));
        if (L->mt(d, L->ng(d)) != L->bottom ||
            L->jn(d, L->ng(d)) != L->top || !center.contains(d))
          r.add_once("T6", L->name(a));
      }
    return r;
  });
  anchor("quantifier-axioms", [&] { return check_quantifier(*L, *L->exists); });
  anchor("quantifier-derived-laws", [&] {
    Report r = derived_law_suite(*L, *L->exists);
    r.merge(check_universal_view(*L, *L->exists));
    return r;
  });
  anchor("quantifier-range", [&] {
    Report r = range_profile(*L, *L->exists).report;
    enumerate_quantifiers(*L, opt.caps);  // parity of both routes
    return r;
  });
  anchor("congruence-lattice", [&] {
    all_congruences(*L, opt.caps);
    return Report{};
  });
  anchor("gamma-diagram", [&] { return gamma_diagram(*L, opt.caps).report; });
  anchor("simplicity", [&] {
    SimplicityCertificate cert = simplicity(*L, opt.caps);
    out.info("simple", cert.simple ? "yes" : "no");
    return Report{};
  });
  anchor("discriminator", [&] { return certify_discriminator(*L, opt.caps); });
  anchor("discriminator-consequences",
         [&] { return discriminator_consequences(*L, opt.caps); });
  anchor("principal-congruences", [&] {
    Report r = principal_lattice(*L, opt.caps).report;
    for (int a = 0; a < L->size(); ++a)
      for (int b = 0; b < L->size(); ++b) principal_congruence(*L, a, b);
    return r;
  });
  anchor("congruence-count", [&] { return count_congruences(*L, opt.caps).report; });
  anchor("duality-roundtrip", [&] { return roundtrip_check(L, opt.caps).report; });
  anchor("congruence-subsets",
         [&] { return closed_semimodal_sets(*L, opt.caps).report; });
  anchor("principal-subsets", [&] {
    Report r;
    for (int a = 0; a < L->size(); ++a)
      for (int b = 0; b < L->size(); ++b)
        r.merge(principal_subset(*L, a, b, opt.caps).report);
    return r;
  });
  anchor("grid-embedding", [&] { return tau_embedding(L, opt.caps).report; });
  anchor("richness", [&] { return richness_via_filters(L, opt.caps).report; });
  anchor("omega-embedding", [&] { return omega_embedding(L, opt.caps).report; });
  anchor("psi-embedding", [&] { return psi_embedding(L, opt.caps).report; });
  anchor("commuting-diagram", [&] { return commuting_diagram_check(L, opt.caps); });
  return out.print(opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite workbench for monadic n x m valued "
               "Lukasiewicz-Moisil algebras"};
  app.require_subcommand(1);

  Options opt;
  std::string format = "text";
  app.add_option("--cap-carrier", opt.caps.carrier, "carrier enumeration cap");
  app.add_option("--cap-endo", opt.caps.endo, "endomorphism enumeration cap");
  app.add_option("--cap-upsets", opt.caps.upsets, "up-set enumeration cap");
  app.add_option("--format", format, "report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string path, name, which = "tau", out_path, emit_path;

  CLI::App* fix = app.add_subcommand("fixture", "emit a named fixture document");
  fix->add_option("name", name, "TRIV2, CHAIN3, SIX or PROD")->required();
  fix->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* chk = app.add_subcommand("check", "validate the axiom suites");
  chk->add_option("path", path)->required();

  CLI::App* qnt = app.add_subcommand("quantifiers", "enumerate quantifiers");
  qnt->add_option("path", path)->required();

  CLI::App* cng = app.add_subcommand("congruences",
                                     "congruence lattice and atom count");
  cng->add_option("path", path)->required();

  CLI::App* spc = app.add_subcommand("spectrum", "prime-filter dual space");
  spc->add_option("path", path)->required();
  spc->add_option("--emit-space", emit_path, "write the space document");

  CLI::App* rtp = app.add_subcommand("duality-roundtrip",
                                     "dual-of-spectrum isomorphism check");
  rtp->add_option("path", path)->required();

  CLI::App* rep = app.add_subcommand("represent", "functional representations");
  rep->add_option("path", path)->required();
  rep->add_option("--which", which, "tau, omega, psi or diagram")
      ->check(CLI::IsMember({"tau", "omega", "psi", "diagram"}));

  CLI::App* trc = app.add_subcommand("trace",
                                     "run every theorem anchor and report");
  trc->add_option("path", path)->required();

  CLI11_PARSE(app, argc, argv);
  opt.structured = format == "structured";

  try {
    if (fix->parsed()) return cmd_fixture(name, out_path);
    if (chk->parsed()) return cmd_check(path, opt);
    if (qnt->parsed()) return cmd_quantifiers(path, opt);
    if (cng->parsed()) return cmd_congruences(path, opt);
    if (spc->parsed()) return cmd_spectrum(path, opt, emit_path);
    if (rtp->parsed()) return cmd_duality_roundtrip(path, opt);
    if (rep->parsed()) return cmd_represent(path, which, opt);
    if (trc->parsed()) return cmd_trace(path, opt);
  } catch (const EarlyExit& e) {
    return e.code;
  } catch (const CapExceeded& e) {
    std::cout << "cap exceeded: " << e.cap << " (" << e.what() << ")\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cout << "parse error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const StructuralError& e) {
    std::cout << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const RejectedInput& e) {
    std::cout << "rejected: " << e.what() << "\n";
    return kExitLawFailure;
  } catch (const InternalCheckError& e) {
    std::cout << "internal check failed: " << e.what() << "\n";
    return kExitLawFailure;
  }
  return kExitPass;
}
