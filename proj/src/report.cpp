#include "kstar/report.hpp"

#include <iomanip>
#include <sstream>

#include "kstar/formula.hpp"

namespace kstar {

namespace {

std::string dnf(const PropSet& s, const Signature& sig) { return canonical_text(s, sig); }
std::string dnf(const Theory& t, const Signature& sig) { return canonical_text(t.models(), sig); }

std::string bindings_text(const Bindings& b, const Signature& sig)
{
    std::string out = "K = " + dnf(b.k, sig);
    if (b.k_prime)
        out += "; K' = " + dnf(*b.k_prime, sig);
    out += "; phi = " + dnf(b.phi, sig);
    if (b.psi)
        out += "; psi = " + dnf(*b.psi, sig);
    return out;
}

} // namespace

std::string format_text(const Violation& v, const Signature& sig)
{
    return bindings_text(v.bindings, sig) + "\n    observed: " + dnf(v.observed, sig) + "\n    required: " + v.required;
}

std::string format_text(const SuiteReport& report, const Signature& sig)
{
    std::ostringstream out;
    out << "mode: " << to_string(report.mode);
    if (report.seed)
        out << " seed=" << *report.seed << " samples=" << report.samples;
    out << "\natoms:";
    for (const auto& a : sig.atoms())
        out << ' ' << a;
    out << "\ndomain: " << report.domain_size << " theories x " << report.domain_size << " formulas\n";

    std::size_t passed = 0;
    for (const auto& r : report.results) {
        out << std::left << std::setw(12) << to_string(r.postulate);
        if (r.passed()) {
            ++passed;
            out << "pass\n";
        } else {
            out << "FAIL  " << format_text(*r.violation, sig) << '\n';
        }
    }
    out << "summary: " << passed << '/' << report.results.size() << " pass\n";
    return out.str();
}

nlohmann::json witness_json(const Violation& v, const Signature& sig)
{
    nlohmann::json w;
    w["K"] = dnf(v.bindings.k, sig);
    if (v.bindings.k_prime)
        w["Kprime"] = dnf(*v.bindings.k_prime, sig);
    w["phi"] = dnf(v.bindings.phi, sig);
    if (v.bindings.psi)
        w["psi"] = dnf(*v.bindings.psi, sig);
    w["observed"] = dnf(v.observed, sig);
    w["required"] = v.required;
    return w;
}

nlohmann::json to_json(const SuiteReport& report, const Signature& sig)
{
    nlohmann::json j;
    j["atoms"] = sig.atoms();
    j["domain_size"] = report.domain_size;
    j["mode"] = std::string(to_string(report.mode));
    if (report.seed) {
        j["seed"] = *report.seed;
        j["samples"] = report.samples;
    }
    j["all_pass"] = report.all_pass();
    auto& results = j["results"] = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json e;
        e["postulate"] = std::string(to_string(r.postulate));
        e["verdict"] = r.passed() ? "pass" : "fail";
        if (r.violation)
            e["witness"] = witness_json(*r.violation, sig);
        e["mode"] = std::string(to_string(report.mode));
        if (report.seed)
            e["seed"] = *report.seed;
        results.push_back(std::move(e));
    }
    return j;
}

std::string format_text(const RationalityReport& report, const Signature& sig)
{
    std::ostringstream out;
    for (auto p : all_rational_properties) {
        out << std::left << std::setw(5) << short_name(p);
        const auto& f = report.failure(p);
        if (!f) {
            out << "pass\n";
            continue;
        }
        out << "FAIL  phi = " << dnf(f->phi, sig);
        if (f->psi)
            out << "; psi = " << dnf(*f->psi, sig);
        if (f->chi)
            out << "; chi = " << dnf(*f->chi, sig);
        out << '\n';
    }
    return out.str();
}

} // namespace kstar
