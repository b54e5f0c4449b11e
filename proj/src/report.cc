#include "bsgate/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bsgate {

using nlohmann::json;

namespace {

void write_json(const json &j, std::string &out, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad + json(it.key()).dump() + ": ";
                write_json(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) {
                    out += ",\n";
                }
                out += pad;
                write_json(j[i], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

json matrix_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(row);
    }
    return rows;
}

json complex_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

json occupation_json(const OccupationOutcome &o) {
    json j;
    j["representable"] = o.representable;
    if (o.representable) {
        j["vector"] = o.vector;
        j["outcome"] = o.outcome.label();
        j["sign"] = o.sign;
    } else {
        j["error"] = o.error;
    }
    return j;
}

json bosonic_json(const BosonicOutcome &b) {
    json j;
    j["retained_probability"] = b.retained_probability;
    json conditional = json::object();
    for (auto label : kLogicalLabels) {
        auto it = b.conditional.find(LogicalState::from_label(label));
        conditional[std::string(label)] = it == b.conditional.end() ? 0.0 : it->second;
    }
    j["conditional"] = conditional;
    j["bunched_fraction"] = b.bunched_fraction;
    j["cross_pair_fraction"] = b.cross_pair_fraction;
    j["dominant"] = b.dominant ? json(b.dominant->label()) : json(nullptr);
    j["retained_events"] = b.retained_events;
    return j;
}

json angles_json(const AngleVector &angles) { return angles.values(); }

json network_json(const RunConfig &config, const TransferMatrix &g) {
    json j;
    j["gate"] = std::string(gate_name(config.target.kind));
    j["angles"] = angles_json(config.angles);
    if (config.signs) {
        j["signs"] = config.signs->signs;
    }
    j["transfer_matrix"] = matrix_json(g);
    j["orthogonality_residual"] = orthogonality_residual(g);
    return j;
}

json postselection_json(const PostselectionRule &rule) {
    json j;
    j["forbidden_modes"] = rule.forbidden_modes;
    j["require_one_per_pair"] = rule.require_one_per_pair;
    return j;
}

json sign_list(const std::vector<SignAssignment> &list) {
    json out = json::array();
    for (const auto &s : list) {
        out.push_back(s.label());
    }
    return out;
}

std::string csv_number(const json &v) {
    if (v.is_null()) {
        return "";
    }
    return v.is_number_float() ? format_double(v.get<double>()) : v.dump();
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string dump_json(const json &doc) {
    std::string out;
    write_json(doc, out, 0);
    out += '\n';
    return out;
}

VerifyOutcome verify_network(const RunConfig &config) {
    const TransferMatrix g = transfer_matrix(staged_network(config.angles));
    VerifyOutcome outcome;
    json &doc = outcome.document;
    doc["network"] = network_json(config, g);

    const double orth = orthogonality_residual(g);
    const bool orthogonal = orth < kExactTolerance;
    bool blocks_ok = false;
    double block_residual = std::numeric_limits<double>::infinity();
    if (orth < 1e-9) {
        BlockDecomposition d = block_decompose(g);
        json residuals;
        residuals["aa_plus_bb"] = d.upper_rows_residual;
        residuals["cc_plus_ee"] = d.lower_rows_residual;
        residuals["ac_plus_be"] = d.upper_lower_residual;
        residuals["ca_plus_eb"] = d.lower_upper_residual;
        doc["block_conditions"] = residuals;
        blocks_ok = d.max_residual() < kExactTolerance;
        block_residual = block_matches_target(d.a, config.target);
        doc["upper_left_block"] = matrix_json(d.a);
    }
    doc["target_matrix"] = matrix_json(config.target.matrix);
    doc["block_residual"] = block_residual;
    doc["tolerance"] = kExactTolerance;
    const bool target_ok = block_residual < kExactTolerance;
    doc["checks"] = {{"orthogonal", orthogonal}, {"block_conditions", blocks_ok}, {"target_match", target_ok}};
    outcome.passed = orthogonal && blocks_ok && target_ok;
    doc["passed"] = outcome.passed;
    return outcome;
}

json gate_report_json(const GateReport &report) {
    json j;
    j["gate"] = std::string(gate_name(report.gate));
    j["semantics"] = semantics_name(report.semantics);
    j["block_residual"] = report.block_residual;
    j["truth_table_match"] = report.truth_table_match;
    j["target_match"] = report.target_match;
    j["mean_success_probability"] =
        report.mean_success_probability ? json(*report.mean_success_probability) : json(nullptr);
    json rows = json::array();
    for (const auto &row : report.inputs) {
        json r;
        r["input"] = row.input.label();
        r["reference"] = row.reference ? json(row.reference->label()) : json(nullptr);
        r["target_action"] = row.target_action ? occupation_json(*row.target_action) : json(nullptr);
        r["matches_reference"] = row.matches_reference;
        r["matches_target"] = row.matches_target;
        if (row.occupation) {
            r["occupation"] = occupation_json(*row.occupation);
        }
        if (row.bosonic) {
            r["bosonic"] = bosonic_json(*row.bosonic);
        }
        rows.push_back(r);
    }
    j["inputs"] = rows;
    return j;
}

json simulate_document(const RunConfig &config) {
    const TransferMatrix g = transfer_matrix(staged_network(config.angles));
    const GateReport full = gate_report(g, config.target, config.postselection, config.semantics);

    json doc;
    doc["network"] = network_json(config, g);
    doc["postselection"] = postselection_json(config.postselection);
    doc["semantics"] = semantics_name(config.semantics);
    doc["block_residual"] = full.block_residual;

    json report = gate_report_json(full);
    json rows = json::array();
    for (const auto &state : config.inputs) {
        rows.push_back(report["inputs"][state.index()]);
    }
    doc["inputs"] = rows;
    doc["truth_table_match"] = full.truth_table_match;
    doc["target_match"] = full.target_match;
    doc["mean_success_probability"] = report["mean_success_probability"];

    if (config.superposition) {
        const auto &amps = *config.superposition;
        json sup;
        json in = json::object();
        for (int i = 0; i < 4; ++i) {
            in[std::string(kLogicalLabels[i])] = complex_json(amps[i]);
        }
        sup["input_amplitudes"] = in;
        if (config.semantics != Semantics::bosonic) {
            // sum_x c_x * sign_x |f(x)>
            std::array<Amplitude, 4> out{};
            bool representable = true;
            for (int i = 0; i < 4; ++i) {
                const auto &occ = *full.inputs[i].occupation;
                if (!occ.representable) {
                    if (amps[i] != Amplitude(0)) {
                        representable = false;
                    }
                    continue;
                }
                out[occ.outcome.index()] += amps[i] * static_cast<double>(occ.sign);
            }
            json occ;
            occ["representable"] = representable;
            if (representable) {
                json o = json::object();
                for (int i = 0; i < 4; ++i) {
                    o[std::string(kLogicalLabels[i])] = complex_json(out[i]);
                }
                occ["output_amplitudes"] = o;
            }
            sup["occupation"] = occ;
        }
        if (config.semantics != Semantics::occupation) {
            sup["bosonic"] = bosonic_json(bosonic_outcome(
                g, TwoPhotonInput::superposition(amps, kConfigNormTolerance), config.postselection));
        }
        doc["superposition"] = sup;
    }
    return doc;
}

std::string simulate_csv(const json &document) {
    std::ostringstream out;
    out << "input,semantics,outcome,probability,sign,retained_probability,bunched_fraction,cross_pair_fraction,"
           "matches_reference\n";
    for (const auto &row : document.at("inputs")) {
        const std::string input = row.at("input").get<std::string>();
        const std::string matches = row.at("matches_reference").get<bool>() ? "true" : "false";
        if (row.contains("occupation")) {
            const json &occ = row["occupation"];
            if (occ.at("representable").get<bool>()) {
                out << input << ",occupation," << occ.at("outcome").get<std::string>() << ",1,"
                    << occ.at("sign").get<int>() << ",,,," << matches << "\n";
            } else {
                out << input << ",occupation,,,,,,," << matches << "\n";
            }
        }
        if (row.contains("bosonic")) {
            const json &bos = row["bosonic"];
            for (const auto &[outcome, p] : bos.at("conditional").items()) {
                out << input << ",bosonic," << outcome << "," << csv_number(p) << ",,"
                    << csv_number(bos.at("retained_probability")) << "," << csv_number(bos.at("bunched_fraction"))
                    << "," << csv_number(bos.at("cross_pair_fraction")) << "," << matches << "\n";
            }
        }
    }
    return out.str();
}

json enumerate_document(const GateTarget &target, const std::optional<ConditionSet> &conditions) {
    json doc;
    doc["mode"] = "enumerate";
    doc["gate"] = std::string(gate_name(target.kind));
    doc["target_matrix"] = matrix_json(target.matrix);
    doc["tolerance"] = kExactTolerance;

    std::vector<SignAssignment> solutions;
    if (conditions) {
        ConditionCrossCheck check = cross_check_conditions(target, *conditions);
        solutions = check.enumerated;
        json cc;
        json constraints = json::array();
        for (const auto &c : conditions->constraints) {
            constraints.push_back(c.describe());
        }
        cc["constraints"] = constraints;
        cc["condition_solutions"] = sign_list(check.from_conditions);
        cc["only_enumerated"] = sign_list(check.only_enumerated);
        cc["only_conditions"] = sign_list(check.only_conditions);
        cc["status"] = check.status;
        cc["conditions_realize"] =
            check.conditions_realize ? json(std::string(gate_name(*check.conditions_realize))) : json(nullptr);
        doc["condition_cross_check"] = cc;
    } else {
        solutions = enumerate_sign_solutions(target);
    }

    json list = json::array();
    for (const auto &s : solutions) {
        Matrix4 block = transfer_matrix(staged_network(s.angles())).topLeftCorner<4, 4>();
        json entry;
        entry["signs"] = s.signs;
        entry["label"] = s.label();
        entry["residual"] = block_matches_target(block, target);
        list.push_back(entry);
    }
    doc["solutions"] = list;
    doc["solution_count"] = solutions.size();
    return doc;
}

json search_document(const SearchResult &result, double tolerance) {
    json doc;
    doc["mode"] = "continuous";
    doc["angles"] = angles_json(result.angles);
    doc["residual"] = result.residual;
    doc["tolerance"] = tolerance;
    doc["converged"] = result.converged;
    doc["best_so_far"] = result.best_so_far;
    return doc;
}

}  // namespace bsgate
