#include "chebwav/report.hpp"

#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "chebwav/csv.hpp"
#include "chebwav/filterbank.hpp"
#include "chebwav/transition.hpp"
#include "chebwav/version.hpp"

namespace chebwav {

namespace {

// Quantize through the same 12-significant-digit text form the CLI prints,
// so serialized values never carry more precision than documented.
double quantize(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

}  // namespace

ReportDocument make_report(int kind, int m) {
    if (kind != 1 && kind != 2)
        throw std::invalid_argument("report kind must be 1 or 2");
    const FilterTaps taps = kind == 1 ? make_type1(m) : make_type2(m);
    const BankPropertyReport bank = analyze_bank(taps);
    const TransitionMatrix T = transition_matrix(taps);
    const SpectrumReport spec = spectrum(T);
    const MarkovReport markov = markov_analysis(T);

    ReportDocument doc;
    doc.kind = kind;
    doc.order = m;
    doc.version = kVersion;
    doc.alias_zero = bank.alias_residual.is_zero();
    doc.pr_delay = bank.pr_delay;
    doc.orthogonal = bank.is_orthogonal;
    doc.condition_e = spec.satisfies_condition_e;
    doc.eigenvalues = spec.eigenvalues;
    doc.stochastic = markov.is_stochastic;
    doc.irreducible = markov.is_irreducible;
    doc.aperiodic = markov.is_aperiodic;
    return doc;
}

std::string serialize_report(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["kind"] = doc.kind;
    j["order"] = doc.order;
    j["version"] = doc.version;
    j["alias_zero"] = doc.alias_zero;
    if (doc.pr_delay)
        j["pr_delay"] = *doc.pr_delay;
    else
        j["pr_delay"] = nullptr;
    j["orthogonal"] = doc.orthogonal;
    j["condition_e"] = doc.condition_e;
    nlohmann::ordered_json evs = nlohmann::ordered_json::array();
    for (const auto& ev : doc.eigenvalues)
        evs.push_back({quantize(ev.real()), quantize(ev.imag())});
    j["eigenvalues"] = std::move(evs);
    j["stochastic"] = doc.stochastic;
    j["irreducible"] = doc.irreducible;
    j["aperiodic"] = doc.aperiodic;
    return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    ReportDocument doc;
    doc.kind = j.at("kind").get<int>();
    doc.order = j.at("order").get<int>();
    doc.version = j.at("version").get<std::string>();
    doc.alias_zero = j.at("alias_zero").get<bool>();
    if (!j.at("pr_delay").is_null()) doc.pr_delay = j.at("pr_delay").get<int>();
    doc.orthogonal = j.at("orthogonal").get<bool>();
    doc.condition_e = j.at("condition_e").get<bool>();
    for (const auto& ev : j.at("eigenvalues"))
        doc.eigenvalues.emplace_back(ev.at(0).get<double>(),
                                     ev.at(1).get<double>());
    doc.stochastic = j.at("stochastic").get<bool>();
    doc.irreducible = j.at("irreducible").get<bool>();
    doc.aperiodic = j.at("aperiodic").get<bool>();
    return doc;
}

}  // namespace chebwav
