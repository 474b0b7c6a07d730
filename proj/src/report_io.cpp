#include "tmh/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace tmh {

std::string psc_to_string(PscVerdict v) {
    switch (v) {
        case PscVerdict::Exists: return "exists";
        case PscVerdict::Obstructed: return "obstructed";
        default: return "inapplicable";
    }
}

std::string ko_group_to_string(KOGroup g) {
    switch (g) {
        case KOGroup::Z: return "Z";
        case KOGroup::Z2: return "Z2";
        default: return "trivial";
    }
}

nlohmann::ordered_json report_to_json(const InvariantReport& r, long long elapsed_us) {
    nlohmann::ordered_json j;
    j["n1"] = r.spec.n1;
    j["n2"] = r.spec.n2;
    j["twist"] = r.spec.twists;
    j["d1"] = r.spec.d1;
    j["d2"] = r.spec.d2;
    j["dim_real"] = r.dim_real;
    j["spin"] = r.spin.is_spin;
    if (r.spin.is_spin) {
        j["k1"] = r.spin.k1;
        j["k2"] = r.spin.k2;
    } else {
        j["k1"] = nullptr;
        j["k2"] = nullptr;
    }
    j["sigma1"] = r.spec.sigma1();
    j["sigma2"] = r.spec.sigma2();
    j["a_hat"] = r.a_hat.str();
    if (r.alpha_defined) {
        nlohmann::ordered_json a;
        a["n_mod_8"] = r.alpha.n_mod_8;
        a["group"] = ko_group_to_string(r.alpha.group);
        switch (r.alpha.group) {
            case KOGroup::Z: a["value"] = r.alpha.value.str(); break;
            case KOGroup::Z2: a["value"] = r.alpha.value.is_zero() ? 0 : 1; break;
            default: a["value"] = nullptr; break;
        }
        j["alpha"] = a;
    } else {
        j["alpha"] = nullptr;
    }
    j["psc"] = psc_to_string(r.psc);
    j["no_circle_action"] = r.no_circle_action;
    j["assumptions"] = {{"simply_connected_assumed", r.simply_connected_assumed},
                        {"dim_ge_5", r.dim_ge_5}};
    if (elapsed_us >= 0) j["elapsed_us"] = elapsed_us;
    return j;
}

std::string report_json_line(const InvariantReport& r, long long elapsed_us) {
    return report_to_json(r, elapsed_us).dump();
}

std::string report_json_pretty(const InvariantReport& r) {
    return report_to_json(r).dump(2);
}

std::string report_table(const InvariantReport& r) {
    std::ostringstream os;
    auto row = [&](const char* k, const std::string& v) {
        os << std::left << std::setw(24) << k << v << "\n";
    };
    row("hypersurface", r.spec.str());
    row("dim_real", std::to_string(r.dim_real));
    row("spin", r.spin.is_spin ? "yes" : "no");
    if (r.spin.is_spin) {
        row("k1", std::to_string(r.spin.k1));
        row("k2", std::to_string(r.spin.k2));
    }
    row("sigma1", std::to_string(r.spec.sigma1()));
    row("sigma2", std::to_string(r.spec.sigma2()));
    row("a_hat", r.a_hat.str());
    // the two one-sided characteristic numbers behind a_hat; in even n1+n2
    // their difference carries no meaning (a_hat is 0 by convention there)
    row("F(d1,d2)", f_closed(r.spec).str());
    row("F(-d1,-d2)", f_closed(r.spec.negated()).str());
    if (r.alpha_defined) {
        std::string v = "KO_" + std::to_string(r.alpha.n_mod_8) + " (" +
                        ko_group_to_string(r.alpha.group) + ")";
        if (r.alpha.group != KOGroup::Trivial) v += " value " + r.alpha.value.str();
        row("alpha", v);
    } else {
        row("alpha", "inapplicable (not spin)");
    }
    row("psc", psc_to_string(r.psc));
    row("no_circle_action", r.no_circle_action ? "true" : "false");
    row("assumptions", std::string("simply_connected_assumed=true dim_ge_5=") +
                           (r.dim_ge_5 ? "true" : "false"));
    return os.str();
}

namespace {

const char* kCsvColumns =
    "n1,n2,twist,d1,d2,dim_real,spin,k1,k2,sigma1,sigma2,a_hat,"
    "alpha_n_mod_8,alpha_group,alpha_value,psc,no_circle_action,"
    "simply_connected_assumed,dim_ge_5";

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_header(bool with_timing) {
    std::string h = kCsvColumns;
    if (with_timing) h += ",elapsed_us";
    return h;
}

std::string report_csv_row(const InvariantReport& r, long long elapsed_us) {
    std::ostringstream os;
    os << r.spec.n1 << ',' << r.spec.n2 << ',';
    for (size_t i = 0; i < r.spec.twists.size(); ++i) {
        if (i) os << ' ';
        os << r.spec.twists[i];
    }
    os << ',' << r.spec.d1 << ',' << r.spec.d2 << ',' << r.dim_real << ','
       << bool_str(r.spin.is_spin) << ',';
    if (r.spin.is_spin)
        os << r.spin.k1 << ',' << r.spin.k2;
    else
        os << ',';
    os << ',' << r.spec.sigma1() << ',' << r.spec.sigma2() << ',' << r.a_hat.str() << ',';
    if (r.alpha_defined) {
        os << r.alpha.n_mod_8 << ',' << ko_group_to_string(r.alpha.group) << ',';
        if (r.alpha.group == KOGroup::Z)
            os << r.alpha.value.str();
        else if (r.alpha.group == KOGroup::Z2)
            os << (r.alpha.value.is_zero() ? '0' : '1');
    } else {
        os << ",,";
    }
    os << ',' << psc_to_string(r.psc) << ',' << bool_str(r.no_circle_action) << ','
       << bool_str(r.simply_connected_assumed) << ',' << bool_str(r.dim_ge_5);
    if (elapsed_us >= 0) os << ',' << elapsed_us;
    return os.str();
}

TwistSpec spec_from_json(const nlohmann::json& j) {
    TwistSpec s;
    s.n1 = j.at("n1").get<int>();
    s.n2 = j.at("n2").get<int>();
    s.twists = j.at("twist").get<std::vector<long long>>();
    s.d1 = j.at("d1").get<long long>();
    s.d2 = j.at("d2").get<long long>();
    s.validate();
    return s;
}

TwistSpec spec_from_csv_row(const std::string& row) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : row) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    if (fields.size() < 5) throw std::invalid_argument("csv row has too few fields");
    TwistSpec s;
    s.n1 = std::stoi(fields[0]);
    s.n2 = std::stoi(fields[1]);
    std::istringstream ts(fields[2]);
    long long v;
    while (ts >> v) s.twists.push_back(v);
    s.d1 = std::stoll(fields[3]);
    s.d2 = std::stoll(fields[4]);
    s.validate();
    return s;
}

}  // namespace tmh
