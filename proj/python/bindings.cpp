#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icl/caching.hpp"
#include "icl/composite.hpp"
#include "icl/instance.hpp"
#include "icl/outer.hpp"
#include "icl/scheme.hpp"

namespace py = pybind11;
using namespace icl;

namespace {

// Rationals cross the boundary as "num/den" strings; the Python side turns
// them into fractions.Fraction.
std::string frac(const Rational& r) { return to_fraction_string(r); }

std::vector<std::vector<int>> sets_to_lists(const std::vector<MessageSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

py::dict composite_rate(const IndexCodingInstance& inst, std::optional<int> cap, int threads) {
  CompositeOptions opt;
  opt.per_user_cap = cap;
  opt.threads = threads;
  py::gil_scoped_release release;
  const auto r = max_symmetric_rate(inst, opt);
  py::gil_scoped_acquire acquire;
  py::dict allocation;
  for (const auto& [p, v] : r.allocation.rates) allocation[py::tuple(py::cast(std::vector<int>(p.begin(), p.end())))] = frac(v);
  py::dict out;
  out["rate"] = frac(r.symmetric_rate);
  out["best_choice"] = sets_to_lists(r.best_choice.sets);
  out["allocation"] = allocation;
  out["choices_evaluated"] = r.choices_evaluated;
  out["under_approximation"] = r.under_approximation;
  return out;
}

py::dict linear_check(const IndexCodingInstance& inst, const LinearScheme& scheme) {
  validate_scheme(scheme, inst);
  const auto v = check_scheme(inst, scheme, demands_only_choice(inst));
  py::dict out;
  out["passed"] = v.pass();
  out["symmetric_rate"] = frac(v.symmetric_rate);
  out["channel_entropy"] = v.channel_entropy;
  std::vector<bool> channel_ok(v.channel_ok.begin(), v.channel_ok.end());
  out["channel_ok"] = channel_ok;
  std::vector<bool> mac_ok;
  for (int j = 0; j < inst.num_users(); ++j) mac_ok.push_back(v.mac_ok(j));
  out["mac_ok"] = mac_ok;
  return out;
}

std::vector<bool> zero_error(const IndexCodingInstance& inst, const LinearScheme& scheme, const std::string& mode) {
  if (mode != "algebraic" && mode != "enumerate") throw py::value_error("mode must be 'algebraic' or 'enumerate'");
  validate_scheme(scheme, inst);
  const auto r = zero_error_decode_check(inst, scheme, mode == "enumerate" ? DecodeMode::Enumerate : DecodeMode::Algebraic);
  return {r.user_ok.begin(), r.user_ok.end()};
}

py::dict mais_bound(const IndexCodingInstance& inst) {
  const auto r = mais(build_side_info_graph(inst), inst.channel_bits);
  py::dict out;
  out["size"] = r.mais_size;
  out["witness"] = std::vector<int>(r.witness.begin(), r.witness.end());
  out["bound"] = frac(r.symmetric_upper);
  return out;
}

py::dict simulate(int K, int N, int t, std::optional<DemandVector> demands, std::size_t B, const std::string& mode,
                  std::uint64_t seed) {
  if (mode != "full" && mode != "reduced") throw py::value_error("mode must be 'full' or 'reduced'");
  const DemandVector d = demands ? *demands : worst_case_demand(K, N);
  if (B == 0) B = binomial(K, t);
  const auto lib = FileLibrary::random(N, B, seed);
  const auto placement = cman_place(K, t, N, B);
  const auto tr = deliver(placement, lib, d, mode == "full" ? DeliveryMode::Full : DeliveryMode::Reduced);
  std::vector<bool> decoded;
  for (const auto& u : decode_all_users(placement, lib, tr, d)) decoded.push_back(u.ok);
  py::dict out;
  out["load"] = frac(tr.load());
  out["payloads"] = tr.payloads.size();
  out["decoded"] = decoded;
  out["log"] = tr.log();
  return out;
}

py::dict simulate_decentralized(int K, int N, const std::string& M, std::optional<DemandVector> demands,
                                std::size_t B, std::uint64_t seed) {
  const DemandVector d = demands ? *demands : worst_case_demand(K, N);
  const Rational m = parse_rational(M);
  const auto lib = FileLibrary::random(N, B, seed);
  const auto placement = dman_place(K, N, m, B, seed);
  const auto tr = dman_deliver(placement, lib, d);
  std::vector<bool> decoded;
  for (const auto& u : decode_all_users(placement, lib, tr, d)) decoded.push_back(u.ok);
  py::dict out;
  out["load"] = frac(tr.load());
  out["formula"] = frac(r_d_opt(K, N, m));
  out["decoded"] = decoded;
  return out;
}

py::dict theorem4(int K, int N, int t, std::optional<DemandVector> demands, int k_bits) {
  const DemandVector d = demands ? *demands : worst_case_demand(K, N);
  const auto r = verify_theorem4(K, N, t, d, k_bits);
  py::dict out;
  out["passed"] = r.pass;
  out["certified_rate"] = frac(r.certified_rate);
  out["load_from_rate"] = frac(r.load_from_rate);
  out["expected_load"] = frac(r.expected_load);
  out["simulated_load"] = frac(r.simulated_load);
  if (t < K) {
    const auto syn = synthesize_theorem4_scheme(K, N, t, d, k_bits);
    out["instance"] = format_instance(syn.reduction.instance);
    out["scheme"] = format_scheme(syn.scheme);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Index coding bounds and coded caching simulation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
  py::register_exception<InvalidScheme>(m, "InvalidScheme", PyExc_ValueError);
  py::register_exception<NotMultipleUnicast>(m, "NotMultipleUnicast", PyExc_ValueError);
  py::register_exception<SearchSpaceOverflow>(m, "SearchSpaceOverflow", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<Indivisible>(m, "Indivisible", PyExc_ValueError);

  py::class_<IndexCodingInstance>(m, "Instance")
      .def_readonly("num_messages", &IndexCodingInstance::num_messages)
      .def_readonly("channel_bits", &IndexCodingInstance::channel_bits)
      .def_property_readonly("users",
                             [](const IndexCodingInstance& inst) {
                               std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
                               for (const auto& u : inst.users)
                                 out.push_back({{u.demands.begin(), u.demands.end()}, {u.knows.begin(), u.knows.end()}});
                               return out;
                             })
      .def("to_text", &format_instance)
      .def("__repr__", [](const IndexCodingInstance& inst) {
        return "<Instance messages=" + std::to_string(inst.num_messages) + " users=" +
               std::to_string(inst.num_users()) + " channel_bits=" + std::to_string(inst.channel_bits) + ">";
      });

  py::class_<LinearScheme>(m, "Scheme")
      .def_readonly("msg_bits", &LinearScheme::msg_bits)
      .def_readonly("channel_bits", &LinearScheme::channel_bits)
      .def("to_text", &format_scheme);

  m.def("builtin_instance", &builtin_instance, py::arg("name"), py::arg("channel_bits") = 1);
  m.def("parse_instance", &parse_instance_string, py::arg("text"));
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def("builtin_scheme", &builtin_scheme, py::arg("name"));
  m.def("parse_scheme", &parse_scheme_string, py::arg("text"));
  m.def("load_scheme", &load_scheme, py::arg("path"));

  m.def("validate", [](const IndexCodingInstance& inst) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& v : validate_instance(inst).violations) out.push_back({v.user, v.rule});
    return out;
  }, py::arg("instance"));
  m.def("composite_rate", &composite_rate, py::arg("instance"), py::arg("cap") = py::none(), py::arg("threads") = 1);
  m.def("linear_check", &linear_check, py::arg("instance"), py::arg("scheme"));
  m.def("zero_error", &zero_error, py::arg("instance"), py::arg("scheme"), py::arg("mode") = "algebraic");
  m.def("mais", &mais_bound, py::arg("instance"));

  m.def("cache_simulate", &simulate, py::arg("K"), py::arg("N"), py::arg("t"), py::arg("demands") = py::none(),
        py::arg("B") = 0, py::arg("mode") = "reduced", py::arg("seed") = 1);
  m.def("cache_simulate_decentralized", &simulate_decentralized, py::arg("K"), py::arg("N"), py::arg("M"),
        py::arg("demands") = py::none(), py::arg("B") = 10000, py::arg("seed") = 1);
  m.def("verify_theorem4", &theorem4, py::arg("K"), py::arg("N"), py::arg("t"), py::arg("demands") = py::none(),
        py::arg("k_bits") = 1);

  m.def("r_cman", [](int K, int t) { return frac(r_cman(K, t)); });
  m.def("r_c_opt", [](int K, int N, int t) { return frac(r_c_opt(K, N, t)); });
  m.def("r_dman", [](int K, int N, const std::string& M) { return frac(r_dman(K, N, parse_rational(M))); });
  m.def("r_d_opt", [](int K, int N, const std::string& M) { return frac(r_d_opt(K, N, parse_rational(M))); });
}
