#include "modist/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace modist {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

long need_long(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": field '" + key + "' must be an integer");
    return v.get<long>();
}

Rational need_rational(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_string())
        throw std::invalid_argument(std::string(what) + ": field '" + key +
                                    "' must be a \"num/den\" string");
    return Rational::parse(v.get<std::string>());
}

}  // namespace

Json qelem_to_json(const QElem& x) {
    return Json{{"r", x.field().r()}, {"a", x.a().str()}, {"b", x.b().str()}};
}

QElem qelem_from_json(const Json& j) {
    QuadField field = QuadField::real_quadratic(need_long(j, "r", "QElem"));
    return QElem(field, need_rational(j, "a", "QElem"), need_rational(j, "b", "QElem"));
}

Json pointset_to_json(const PointSet& x) {
    Json points = Json::array();
    for (size_t i = 0; i < x.n(); ++i) {
        Json row = Json::array();
        for (const QElem& c : x.point(i)) row.push_back(qelem_to_json(c));
        points.push_back(std::move(row));
    }
    return Json{
        {"r", x.field().r()},
        {"ambient",
         {{"model", x.ambient().model == AmbientModel::Hyperplane ? "hyperplane" : "cartesian"},
          {"d", x.ambient().d}}},
        {"sqScale", qelem_to_json(x.sq_scale())},
        {"points", std::move(points)},
    };
}

PointSet pointset_from_json(const Json& j) {
    QuadField field = QuadField::real_quadratic(need_long(j, "r", "PointSet"));

    const Json& amb = need(j, "ambient", "PointSet");
    std::string model_name = need(amb, "model", "PointSet.ambient").get<std::string>();
    AmbientModel model;
    if (model_name == "hyperplane")
        model = AmbientModel::Hyperplane;
    else if (model_name == "cartesian")
        model = AmbientModel::Cartesian;
    else
        throw std::invalid_argument("PointSet.ambient: unknown model '" + model_name + "'");
    Ambient ambient{model, need_long(amb, "d", "PointSet.ambient")};

    auto elem = [&](const Json& ej, const std::string& where) {
        QElem x = qelem_from_json(ej);
        if (x.field() != field)
            throw std::invalid_argument("PointSet: " + where + " has r=" +
                                        std::to_string(x.field().r()) + ", expected r=" +
                                        std::to_string(field.r()));
        return x;
    };

    QElem sq_scale = elem(need(j, "sqScale", "PointSet"), "sqScale");

    const Json& points = need(j, "points", "PointSet");
    if (!points.is_array()) throw std::invalid_argument("PointSet: 'points' must be an array");
    std::vector<std::vector<QElem>> pts;
    for (size_t i = 0; i < points.size(); ++i) {
        const Json& row = points.at(i);
        if (!row.is_array())
            throw std::invalid_argument("PointSet: point " + std::to_string(i) + " must be an array");
        std::vector<QElem> pt;
        for (size_t k = 0; k < row.size(); ++k)
            pt.push_back(elem(row.at(k), "points[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        pts.push_back(std::move(pt));
    }
    return PointSet::make(field, ambient, std::move(pts), std::move(sq_scale));
}

Json place_to_json(const PrimePlace& place) {
    Json j{{"r", place.field().r()},
           {"p", place.p()},
           {"splitting", splitting_name(place.splitting())}};
    j["c"] = place.c() ? Json(*place.c()) : Json(nullptr);
    return j;
}

Json verdict_to_json(const TightVerdict& verdict, const PrimePlace& place) {
    return Json{
        {"isTight", verdict.is_tight}, {"n", verdict.n},
        {"d", verdict.d},              {"sMod", verdict.s_mod},
        {"normalizable", verdict.normalizable},
        {"zeroResidue", verdict.contains_zero_residue},
        {"reasons", verdict.reasons},  {"place", place_to_json(place)},
    };
}

Json obstruction_to_json(const ObstructionReport& report) {
    return Json{
        {"n", report.n},
        {"d", report.d},
        {"p", report.p},
        {"det", qelem_to_json(report.det)},
        {"detIsZero", report.det_is_zero},
        {"patternHolds", report.pattern_holds},
        {"nModP", report.n_mod_p},
        {"pDividesN", report.p_divides_n},
    };
}

Json sweep_row_to_json(const SweepRow& row) {
    Json j{{"p", row.p},
           {"splitting", splitting_name(row.splitting)},
           {"normalizable", row.normalizable},
           {"tight", row.tight}};
    j["c"] = row.c ? Json(*row.c) : Json(nullptr);
    j["sMod"] = row.s_mod ? Json(*row.s_mod) : Json(nullptr);
    j["zeroResidue"] = row.zero_residue ? Json(*row.zero_residue) : Json(nullptr);
    return j;
}

Json tfamily_verdict_to_json(const TFamilyVerdict& verdict) {
    Json j{{"d", verdict.d},
           {"k", verdict.k},
           {"fieldR", verdict.field_r},
           {"closedForm", verdict.closed_form_exists},
           {"computed", verdict.computed_exists},
           {"agree", verdict.agree},
           {"lrsRatio", qelem_to_json(verdict.lrs_ratio)}};
    j["collapsing"] = verdict.collapsing ? place_to_json(*verdict.collapsing) : Json(nullptr);
    return j;
}

const char* const kSweepTsvHeader = "p\tsplitting\tc\tnormalizable\tsMod\tzeroResidue\ttight";

std::string sweep_row_tsv(const SweepRow& row) {
    std::string out = std::to_string(row.p) + "\t" + splitting_name(row.splitting) + "\t";
    out += row.c ? std::to_string(*row.c) : "-";
    out += row.normalizable ? "\ttrue\t" : "\tfalse\t";
    out += row.s_mod ? std::to_string(*row.s_mod) : "-";
    out += "\t";
    out += row.zero_residue ? (*row.zero_residue ? "true" : "false") : "-";
    out += row.tight ? "\ttrue" : "\tfalse";
    return out;
}

const char* const kClassifyTsvHeader = "d\tk\tfieldR\tclosedForm\tcomputed\tagree\tprimeP\tprimeC";

std::string tfamily_verdict_tsv(const TFamilyVerdict& verdict) {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::string out = std::to_string(verdict.d) + "\t" + std::to_string(verdict.k) + "\t" +
                      std::to_string(verdict.field_r) + "\t" + yn(verdict.closed_form_exists) + "\t" +
                      yn(verdict.computed_exists) + "\t" + yn(verdict.agree) + "\t";
    if (verdict.collapsing) {
        out += std::to_string(verdict.collapsing->p());
        out += "\t";
        out += verdict.collapsing->c() ? std::to_string(*verdict.collapsing->c()) : "-";
    } else {
        out += "-\t-";
    }
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

PointSet read_pointset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
    try {
        return pointset_from_json(j);
    } catch (const std::exception& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
}

void write_pointset(const PointSet& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << dump_json(pointset_to_json(x));
}

}  // namespace modist
