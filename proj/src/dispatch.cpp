#include "genus1/json_io.hpp"
#include "genus1/stable.hpp"

namespace g1 {

namespace {

Field field_from_args(const json& args) {
  return Field::parse(args.value("field", "q"));
}

std::uint64_t seed_from_args(const json& args) { return args.value("seed", 1ull); }

// descriptor or explicit triple; nodal only
NodalTriple nodal_input(const Field& f, const json& j) {
  if (j.is_object() && j.contains("kind") && j.at("kind") == "nodal-triple")
    return nodal_triple_from_json(f, j);
  return descriptor_to_triple(descriptor_from_json(f, j));
}

bool is_cuspidal_input(const json& j) {
  return j.is_object() && j.contains("kind") && j.at("kind") == "cuspidal-triple";
}

json describe_op(const Field& f, const json& args) {
  Descriptor d = descriptor_from_json(f, args.at("descriptor"));
  json out;
  out["descriptor"] = descriptor_to_json(d);
  out["charge"] = charge_to_json(charge_of(d));
  json comps = json::array();
  if (std::holds_alternative<BandDescriptor>(d)) {
    const auto& b = std::get<BandDescriptor>(d);
    for (int i = 1; i <= b.n; ++i) comps.push_back(b.component_multidegree(i));
    out["canonical"] = descriptor_to_json(Descriptor{canonical_band(b)});
  } else {
    const auto& s = std::get<StringDescriptor>(d);
    for (int i = 1; i <= s.n; ++i) comps.push_back(s.component_multidegree(i));
    out["component_ranks"] = s.component_ranks();
    out["canonical"] = descriptor_to_json(d);
  }
  out["component_multidegrees"] = comps;
  return out;
}

json cohomology_op(const Field& f, const json& args) {
  std::string mode = args.value("mode", "oracle");
  json out;
  const json& input = args.at("descriptor");
  if (is_cuspidal_input(input)) {
    if (mode != "oracle")
      fail("invalid-argument", "the closed formula covers bands on cycles; use the oracle");
    Cohomology c = cohomology(cuspidal_triple_from_json(f, input));
    out["oracle"] = json{{"h0", c.h0}, {"h1", c.h1}};
    return out;
  }
  std::optional<Descriptor> desc;
  if (!(input.contains("kind") && input.at("kind") == "nodal-triple"))
    desc = descriptor_from_json(f, input);
  if (mode == "formula" || mode == "both") {
    if (!desc || !std::holds_alternative<BandDescriptor>(*desc))
      fail("invalid-argument", "the closed cohomology formula applies to band descriptors");
    Cohomology c = cohomology_formula(std::get<BandDescriptor>(*desc));
    out["formula"] = json{{"h0", c.h0}, {"h1", c.h1}};
  }
  if (mode == "oracle" || mode == "both") {
    Cohomology c = cohomology(nodal_input(f, input));
    out["oracle"] = json{{"h0", c.h0}, {"h1", c.h1}};
  }
  if (mode == "both") out["match"] = out["formula"] == out["oracle"];
  return out;
}

json tensor_op(const Field& f, const json& args) {
  Descriptor a = descriptor_from_json(f, args.at("a"));
  Descriptor b = descriptor_from_json(f, args.at("b"));
  if (!std::holds_alternative<BandDescriptor>(a) || !std::holds_alternative<BandDescriptor>(b))
    fail("unsupported", "tensor products of strings are not part of the calculus");
  auto r = tensor_bands(std::get<BandDescriptor>(a), std::get<BandDescriptor>(b));
  return decomposition_to_json(r);
}

json pushforward_op(const Field& f, const json& args) {
  int target = args.at("to_cycle").get<int>();
  const json& data = args.at("descriptor");
  auto d = data.at("d").get<std::vector<int>>();
  int m = data.value("m", 1);
  Poly p = data.contains("p") ? poly_from_json(f, data.at("p"))
                              : Poly::linear_minus(scalar_from_json(f, data.at("lambda")));
  BandDescriptor out = pushforward_line(target, d, p, m);
  return json{{"descriptor", descriptor_to_json(Descriptor{out})},
              {"charge", charge_to_json(out.charge())}};
}

json hom_op(const Field& f, const json& args) {
  const json& ja = args.at("a");
  const json& jb = args.at("b");
  if (is_cuspidal_input(ja) != is_cuspidal_input(jb))
    fail("invalid-argument", "hom needs two objects over the same curve");
  long dim = 0;
  if (is_cuspidal_input(ja)) {
    dim = hom_dim(cuspidal_triple_from_json(f, ja), cuspidal_triple_from_json(f, jb));
  } else {
    dim = hom_dim(nodal_input(f, ja), nodal_input(f, jb));
  }
  return json{{"hom_dim", dim}};
}

json isomorphic_op(const Field& f, const json& args) {
  const json& ja = args.at("a");
  const json& jb = args.at("b");
  if (is_cuspidal_input(ja) != is_cuspidal_input(jb))
    fail("invalid-argument", "isomorphism test needs two objects over the same curve");
  Tristate r;
  if (is_cuspidal_input(ja)) {
    r = is_isomorphic(cuspidal_triple_from_json(f, ja), cuspidal_triple_from_json(f, jb),
                      seed_from_args(args));
  } else {
    r = is_isomorphic(nodal_input(f, ja), nodal_input(f, jb), seed_from_args(args));
  }
  if (r == Tristate::inconclusive)
    fail("inconclusive", "randomized search found no invertible morphism",
         "retry with a different seed or a larger field");
  return json{{"isomorphic", r == Tristate::yes}};
}

json stable_seq_op(const json& args) {
  auto s = stable_sequence(args.at("r").get<long>(), args.at("d").get<long>());
  return json{{"bits", s.bits}, {"twist", s.twist}, {"sequence", s.sequence()}, {"trace", s.trace}};
}

json cusp_matrix_op(const Field& f, const json& args) {
  Scalar lam = scalar_from_json(f, args.at("lambda"));
  auto c = cuspidal_simple_matrix(args.at("r").get<long>(), args.at("d").get<long>(), lam);
  return json{{"triple", cuspidal_triple_to_json(c.triple)},
              {"end_dim", hom_dim(c.triple, c.triple)},
              {"trace", c.trace}};
}

json cusp_tf_op(const Field& f, const json& args) {
  auto c = cuspidal_tf_nonlocallyfree(args.at("r").get<long>(), args.at("d").get<long>(), f,
                                      seed_from_args(args));
  return json{{"triple", cuspidal_triple_to_json(c.triple)},
              {"end_dim", hom_dim(c.triple, c.triple)},
              {"trace", c.trace}};
}

}  // namespace

json run_op(const std::string& op, const json& args) {
  Field f = field_from_args(args);
  if (op == "birkhoff") {
    LaurentMatrix m = laurent_matrix_from_json(f, args.at("matrix"));
    auto r = birkhoff_factor(m);
    std::vector<int> split = splitting_type(m);
    return json{{"exponents", r.exponents},
                {"splitting_type", split},
                {"S", laurent_matrix_to_json(r.S)},
                {"T", laurent_matrix_to_json(r.T)}};
  }
  if (op == "describe") return describe_op(f, args);
  if (op == "triple") {
    NodalTriple t = descriptor_to_triple(descriptor_from_json(f, args.at("descriptor")));
    return json{{"triple", nodal_triple_to_json(t)}, {"chi", t.chi()}};
  }
  if (op == "cohomology") return cohomology_op(f, args);
  if (op == "tensor") return tensor_op(f, args);
  if (op == "dual") {
    Descriptor d = dual(descriptor_from_json(f, args.at("descriptor")));
    return json{{"descriptor", descriptor_to_json(d)}, {"charge", charge_to_json(charge_of(d))}};
  }
  if (op == "pullback") {
    Descriptor d = descriptor_from_json(f, args.at("descriptor"));
    if (!std::holds_alternative<BandDescriptor>(d))
      fail("unsupported", "etale pullback takes a band descriptor");
    return decomposition_to_json(pullback_etale(std::get<BandDescriptor>(d), args.at("r").get<int>()));
  }
  if (op == "pushforward") return pushforward_op(f, args);
  if (op == "stable-seq") return stable_seq_op(args);
  if (op == "cusp-matrix") return cusp_matrix_op(f, args);
  if (op == "cusp-tf") return cusp_tf_op(f, args);
  if (op == "hom") return hom_op(f, args);
  if (op == "isomorphic") return isomorphic_op(f, args);
  if (op == "fm") {
    TorsionModuleDescriptor t = module_from_json(f, args.at("module"));
    Descriptor img = fm_image(t);
    return json{{"image", descriptor_to_json(img)},
                {"charge", charge_to_json(charge_of(img))},
                {"module_length", module_length(t)}};
  }
  if (op == "verify")
    return run_verify(args.value("suite", "all"), f, seed_from_args(args), args.value("cases", 0L));
  fail("invalid-argument", "unknown operation: " + op,
       "expected one of birkhoff, describe, triple, cohomology, tensor, dual, pullback, "
       "pushforward, stable-seq, cusp-matrix, cusp-tf, hom, isomorphic, fm, verify");
}

}  // namespace g1
