#include "cli.hpp"

#include "klein/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace klein::cli {

namespace {

using json = nlohmann::ordered_json;

json cleared_json(const RatFunc& r) {
    auto [n, d] = integer_cleared(r);
    return {{"num", n.str()}, {"den", d.str()}};
}

std::string pattern(const std::vector<unsigned>& p) {
    std::string s;
    for (unsigned k : p) s += (s.empty() ? "" : "+") + std::to_string(k);
    return s;
}

json triple_json(const ExponentTriple& e) { return {e.e0.str(), e.e1.str(), e.einf.str()}; }
json params_json(const HGParams& p) { return {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}}; }

int out_of_scope(const Classification& c, bool as_json, std::ostream& out) {
    if (as_json)
        out << json{{"status", "rejected"}, {"reason", c.reason}}.dump(2) << "\n";
    else
        out << c.reason << "\n";
    return kOutOfScope;
}

int cmd_classify(const ExponentTriple& e, bool as_json, std::ostream& out) {
    Classification c = classify(e);
    if (c.rejection != Rejection::None) return out_of_scope(c, as_json, out);
    const SchwarzType& t = *c.type;
    PointAssignment pa = assign_points(e, t);
    unsigned d = covering_degree(e, t.m);
    if (as_json) {
        json j{{"status", "ok"},        {"input", triple_json(e)},
               {"type", t.label},       {"group", group_name(t.group)},
               {"m", t.m},              {"degree", d},
               {"assigned", triple_json(pa.exponents)}};
        out << j.dump(2) << "\n";
    } else {
        out << "type: " << t.label << " " << group_name(t.group) << "\n";
        out << "degree: " << d << "\n";
        out << "assigned exponents: " << pa.exponents.str() << "\n";
    }
    return kOk;
}

int cmd_solve(const ExponentTriple& e, bool as_json, std::ostream& out) {
    Classification c = classify(e);
    if (c.rejection != Rejection::None) return out_of_scope(c, as_json, out);
    PullbackResult r = compute_covering(e);
    if (as_json) {
        json j;
        j["status"] = "ok";
        j["input"] = triple_json(e);
        j["type"] = r.type.label;
        j["group"] = group_name(r.type.group);
        j["assigned"] = triple_json(r.assignment.exponents);
        j["degree"] = r.degree;
        j["psi"] = cleared_json(r.psi);
        j["psi_factored"] = render_factored(r.psi);
        j["w"] = r.w.pretty();
        j["curve"] = r.curve.str();
        j["relation"] = cleared_json(r.relation);
        j["ramification"] = {{"0", r.ramification[0]}, {"1", r.ramification[1]}, {"inf", r.ramification[2]}};
        j["fibers"] = {zpoint_name(r.fiber[0]), zpoint_name(r.fiber[1]), zpoint_name(r.fiber[2])};
        j["elimination"] = r.elimination;
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "input: " << e.str() << "\n";
    out << "type: " << r.type.label << " " << group_name(r.type.group) << "\n";
    out << "assigned exponents: " << r.assignment.exponents.str() << "\n";
    out << "degree: " << r.degree << "\n";
    out << "Z = " << render_factored(r.psi) << "\n";
    out << "psi: " << cleared_str(r.psi) << "\n";
    out << "w = " << r.w.pretty() << "\n";
    out << "curve: " << r.curve.str() << "\n";
    out << "relation: z = w * " << cleared_str(r.relation) << "\n";
    const char* names[] = {"0", "1", "inf"};
    for (int i = 0; i < 3; ++i) out << "ramification over Z=" << names[i] << ": " << pattern(r.ramification[i]) << "\n";
    out << "X=0,1,inf lie over Z=" << zpoint_name(r.fiber[0]) << "," << zpoint_name(r.fiber[1]) << ","
        << zpoint_name(r.fiber[2]) << "\n";
    return kOk;
}

int cmd_identity(const ExponentTriple& e, std::size_t order, bool as_json, std::ostream& out) {
    Classification c = classify(e);
    if (c.rejection != Rejection::None) return out_of_scope(c, as_json, out);
    TransformationIdentity id = derive_identity(e, order);
    VerificationReport rep = check_identity(id, order);
    if (as_json) {
        json theta = json::array();
        for (const auto& f : id.theta.factors) theta.push_back({{"base", f.base.str()}, {"exponent", f.exponent.str()}});
        json j{{"status", rep.overall() ? "pass" : "fail"},
               {"lhs", params_json(id.lhs_params)},
               {"theta", theta},
               {"rhs", params_json(id.rhs_params)},
               {"psi", cleared_json(id.psi)},
               {"psi_factored", render_factored(id.psi)},
               {"order", order}};
        out << j.dump(2) << "\n";
    } else {
        out << id.str() << "\n";
        out << "verified to order " << order << ": " << (rep.overall() ? "pass" : "fail") << "\n";
    }
    return rep.overall() ? kOk : kVerifyFailed;
}

int report_exit(const VerificationReport& rep, bool as_json, std::ostream& out) {
    out << (as_json ? rep.render_json() + "\n" : rep.render_text());
    return rep.overall() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Klein pull-back coverings for algebraic Gauss hypergeometric equations"};
    app.name(args.empty() ? "klein" : args[0]);
    app.require_subcommand(1);

    std::string exps, format = "text", covering;
    std::size_t order = 20;
    auto add_exponents = [&](CLI::App* s) {
        s->add_option("--exponents", exps, "local exponent differences e0,e1,einf")->required();
    };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_order = [&](CLI::App* s) {
        s->add_option("--order", order, "series order")->check(CLI::Range(1, 400));
    };

    CLI::App* solve = app.add_subcommand("solve", "compute the Klein pull-back covering");
    add_exponents(solve);
    add_format(solve);
    CLI::App* ident = app.add_subcommand("identity", "derive the induced 2F1 transformation");
    add_exponents(ident);
    add_format(ident);
    add_order(ident);
    CLI::App* cls = app.add_subcommand("classify", "Schwarz type of an exponent triple");
    add_exponents(cls);
    add_format(cls);
    CLI::App* vdb = app.add_subcommand("verify-db", "check every database identity by series");
    add_format(vdb);
    add_order(vdb);
    CLI::App* vcov = app.add_subcommand("verify-covering", "check a covering against H(e0,e1,einf)");
    add_exponents(vcov);
    add_format(vcov);
    vcov->add_option("--covering", covering, "rational function of X, e.g. \"27*X/(4*X-1)^3\"")->required();
    CLI::App* exp = app.add_subcommand("export-db", "print the database in the line-oriented export format");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    bool as_json = format == "json";

    ExponentTriple e;
    if (!exps.empty()) {
        try {
            e = ExponentTriple::parse(exps);
        } catch (const std::exception& ex) {
            err << "error: " << ex.what() << "\n";
            return kUsage;
        }
    }
    try {
        if (solve->parsed()) return cmd_solve(e, as_json, out);
        if (ident->parsed()) return cmd_identity(e, order, as_json, out);
        if (cls->parsed()) return cmd_classify(e, as_json, out);
        if (vdb->parsed()) {
            VerificationReport rep = check_database(order);
            if (rep.overall() && !as_json) {
                out << "all identities pass (" << rep.checks.size() << " identities, order " << order << ")\n";
                return kOk;
            }
            return report_exit(rep, as_json, out);
        }
        if (vcov->parsed()) {
            RatFunc psi;
            try {
                psi = RatFunc::parse(covering);
            } catch (const std::exception& ex) {
                err << "error: " << ex.what() << "\n";
                return kUsage;
            }
            Classification c = classify(e);
            if (c.rejection != Rejection::None) return out_of_scope(c, as_json, out);
            return report_exit(check_covering(e, psi), as_json, out);
        }
        if (exp->parsed()) {
            out << render_export(export_records());
            return kOk;
        }
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kOutOfScope;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace klein::cli
