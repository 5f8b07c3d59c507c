#include "hankel/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace hankel {

Json scalar_to_json(const Scalar& s) {
    switch (s.mode()) {
        case Mode::exact: return Json(gauss_to_string(s.exact_value()));
        case Mode::fp: {
            auto v = s.fp_value();
            return Json::array({v.real(), v.imag()});
        }
        case Mode::gf2: return Json(s.gf2_value() ? 1 : 0);
    }
    return {};
}

Scalar scalar_from_json(const Json& j, Mode mode) {
    if (mode == Mode::exact) {
        if (!j.is_string()) throw ParseError("exact scalar must be a string");
        return Scalar::exact(gauss_from_string(j.get<std::string>()));
    }
    if (mode == Mode::fp) {
        if (j.is_number()) return Scalar::fp({j.get<double>(), 0.0});
        if (!j.is_array() || j.size() != 2) throw ParseError("float scalar must be [re, im]");
        return Scalar::fp({j[0].get<double>(), j[1].get<double>()});
    }
    throw ParseError("unsupported scalar mode in JSON");
}

Json tensor_to_json(const HankelTensor& H) {
    Json j;
    j["n"] = H.n;
    j["m"] = H.m;
    j["mode"] = mode_name(H.mode());
    Json arr = Json::array();
    for (const auto& s : H.h) arr.push_back(scalar_to_json(s));
    j["h"] = arr;
    return j;
}

HankelTensor tensor_from_json(const Json& j) {
    try {
        std::size_t n = j.at("n").get<std::size_t>();
        std::size_t m = j.at("m").get<std::size_t>();
        Mode mode = mode_from_name(j.value("mode", "exact"));
        std::vector<Scalar> h;
        for (const auto& e : j.at("h")) h.push_back(scalar_from_json(e, mode));
        return hankel_from_h(n, m, std::move(h));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad tensor JSON: ") + e.what());
    }
}

Json decomposition_to_json(const VandermondeDecomposition& dec) {
    Json j;
    j["n"] = dec.n;
    j["m"] = dec.m;
    j["claimed_rank"] = dec.claimed_rank;
    j["unique"] = dec.unique;
    j["exact"] = dec.exact;
    Mode mode = Mode::exact;
    for (const auto& t : dec.terms)
        if (t.lambda.mode() == Mode::fp) mode = Mode::fp;
    j["mode"] = mode_name(mode);
    Json terms = Json::array();
    for (const auto& t : dec.terms) {
        auto conv = [&](const Scalar& s) {
            if (mode == Mode::fp && s.mode() == Mode::exact) return scalar_to_json(Scalar::fp(s.to_complex()));
            return scalar_to_json(s);
        };
        Json jt;
        jt["lambda"] = conv(t.lambda);
        jt["a"] = conv(t.a);
        jt["b"] = conv(t.b);
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j;
}

VandermondeDecomposition decomposition_from_json(const Json& j) {
    try {
        VandermondeDecomposition dec;
        dec.n = j.at("n").get<std::size_t>();
        dec.m = j.at("m").get<std::size_t>();
        dec.unique = j.value("unique", false);
        dec.exact = j.value("exact", false);
        Mode mode = mode_from_name(j.value("mode", "exact"));
        for (const auto& e : j.at("terms")) {
            VandermondeTerm t{scalar_from_json(e.at("lambda"), mode),
                              scalar_from_json(e.at("a"), mode),
                              scalar_from_json(e.at("b"), mode)};
            dec.terms.push_back(std::move(t));
        }
        dec.claimed_rank = j.value("claimed_rank", dec.terms.size());
        return dec;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad decomposition JSON: ") + e.what());
    }
}

namespace {

Json interval_to_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

}  // namespace

Json report_to_json(const RankReport& rep) {
    Json j;
    j["vrank"] = rep.vrank;
    j["brank_V"] = rep.brank_V;
    j["cp_rank"] = interval_to_json(rep.cp_rank);
    j["sym_rank"] = interval_to_json(rep.sym_rank);
    j["brank"] = interval_to_json(rep.brank);
    j["sym_brank"] = interval_to_json(rep.sym_brank);
    j["case"] = rank_case_name(rep.kase);
    Json certs = Json::array();
    for (const auto& c : rep.certificates) {
        Json jc;
        jc["quantity"] = c.quantity;
        jc["theorem"] = c.theorem;
        jc["witness"] = c.witness;
        certs.push_back(jc);
    }
    j["certificates"] = certs;
    return j;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON parse failure in '") + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ParseError("cannot open '" + tmp + "' for writing");
        out << j.dump(2) << '\n';
        if (!out) throw ParseError("write failure on '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ParseError("atomic rename to '" + path + "' failed");
}

}  // namespace hankel
