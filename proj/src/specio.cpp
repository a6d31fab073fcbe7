#include "hypell/specio.hpp"

#include <cctype>
#include <fstream>

#include "hypell/errors.hpp"

namespace hypell {

Json poly_to_json(const QPoly& f) {
    Json j = Json::array();
    for (const Rat& c : f.coeffs()) j.push_back(format_rat(c));
    return j;
}

QPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw io_error("polynomial record must be an array of coefficient strings");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) {
        if (c.is_string())
            coeffs.push_back(parse_rat(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(Rat(c.get<long>()));
        else
            throw io_error("polynomial coefficient must be an exact decimal string: " + c.dump());
    }
    return QPoly(std::move(coeffs));
}

namespace {

// Recursive-descent reader for sums of [coefficient][var[^exp]] terms.
// Whitespace is free; implicit multiplication binds coefficient to
// variable ("2x^3"), an explicit '*' is also accepted.
class ExprParser {
  public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    QPoly parse() {
        QPoly result;
        skip_ws();
        if (at_end()) throw io_error("empty polynomial expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = (take() == '-') ? -1 : 1;
            } else if (!first) {
                throw io_error(err("expected + or - between terms"));
            }
            result += term(sign);
            skip_ws();
            first = false;
        }
        return result;
    }

  private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    char take() { return s_[i_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }

    std::string err(const std::string& what) const {
        return what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"";
    }

    Int integer() {
        skip_ws();
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        if (digits.empty()) throw io_error(err("expected a number"));
        return Int(digits);
    }

    // digits [ / digits ]; the slash is only consumed when a digit follows,
    // so "x/2" parses as (1/2) x via the caller.
    Rat number() {
        Int num = integer();
        skip_ws();
        if (!at_end() && peek() == '/' && i_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
            ++i_;
            Int den = integer();
            if (den == 0) throw io_error(err("zero denominator"));
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    std::string variable() {
        std::string name;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) name += take();
        return name;
    }

    QPoly term(int sign) {
        skip_ws();
        if (at_end()) throw io_error(err("dangling sign"));
        Rat coeff(sign);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number() * sign;
            saw_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
            }
        }
        if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string name = variable();
            if (var_.empty())
                var_ = name;
            else if (var_ != name)
                throw io_error(err("mixed variable names " + var_ + " and " + name));
            long exp = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                take();
                exp = int_from(integer());
                if (exp < 0) throw io_error(err("negative exponent"));
            }
            skip_ws();
            // trailing /n divides the whole monomial: "x/2" is (1/2) x
            if (!at_end() && peek() == '/') {
                take();
                Int den = integer();
                if (den == 0) throw io_error(err("zero denominator"));
                coeff /= Rat(den);
            }
            return QPoly::monomial(static_cast<int>(exp), coeff);
        }
        if (!saw_coeff) throw io_error(err("expected a coefficient or variable"));
        return QPoly(coeff);
    }

    long int_from(const Int& n) {
        if (!n.fits_slong_p()) throw io_error(err("exponent too large"));
        return n.get_si();
    }

    const std::string& s_;
    size_t i_ = 0;
    std::string var_;
};

} // namespace

QPoly poly_from_string(const std::string& expr) { return ExprParser(expr).parse(); }

Json curve_to_json(const HyperCurve& C) {
    Json j;
    j["model"] = "hyperelliptic";
    j["f"] = poly_to_json(C.f);
    if (!C.label.empty()) j["label"] = C.label;
    return j;
}

HyperCurve curve_from_json(const Json& j) {
    if (!j.is_object()) throw io_error("curve record must be an object");
    if (j.value("model", std::string()) != "hyperelliptic")
        throw io_error("curve record must declare model \"hyperelliptic\"");
    if (!j.contains("f")) throw io_error("curve record is missing the coefficient list f");
    QPoly f = poly_from_json(j.at("f"));
    return new_hyperelliptic(f, j.value("label", std::string()));
}

namespace {

std::string kind_str(PlaceKind k) {
    switch (k) {
        case PlaceKind::FiniteSplit: return "split";
        case PlaceKind::FiniteRamified: return "ramified";
        case PlaceKind::FiniteInert: return "inert";
        case PlaceKind::Infinite: return "infinite";
    }
    throw internal_error("unhandled place kind");
}

} // namespace

Json place_to_json(const Place& P) {
    Json j;
    j["kind"] = kind_str(P.kind);
    if (P.kind == PlaceKind::Infinite) {
        j["index"] = P.infinite_index;
    } else {
        j["u"] = poly_to_json(P.u);
        if (P.kind == PlaceKind::FiniteSplit) j["v"] = poly_to_json(P.v);
    }
    return j;
}

Place place_from_json(const HyperCurve& C, const Json& j) {
    if (!j.is_object()) throw io_error("place record must be an object");
    std::string kind = j.value("kind", std::string());
    if (kind == "infinite") return infinite_place(C, j.value("index", 0));
    if (!j.contains("u")) throw io_error("finite place record is missing u");
    QPoly u = poly_from_json(j.at("u"));
    if (kind == "inert") return make_inert_place(C, u);
    QPoly v = j.contains("v") ? poly_from_json(j.at("v")) : QPoly();
    Place P = make_place(C, u, v);
    if (!kind.empty() && kind_str(P.kind) != kind)
        throw io_error("place data has kind " + kind_str(P.kind) + ", record declared " + kind);
    return P;
}

Json divisor_to_json(const Divisor& D) {
    Json places = Json::array();
    std::vector<int> infinite;
    for (const auto& [P, mult] : D.entries()) {
        if (P.kind == PlaceKind::Infinite) {
            if (static_cast<int>(infinite.size()) <= P.infinite_index)
                infinite.resize(P.infinite_index + 1, 0);
            infinite[P.infinite_index] = mult;
        } else {
            Json entry = place_to_json(P);
            entry["mult"] = mult;
            places.push_back(std::move(entry));
        }
    }
    return Json{{"places", places}, {"infinite", infinite}};
}

Divisor divisor_from_json(const HyperCurve& C, const Json& j) {
    if (!j.is_object()) throw io_error("divisor record must be an object");
    Divisor D;
    for (const Json& entry : j.value("places", Json::array())) {
        int mult = entry.value("mult", 1);
        if (mult != 0) D.add(place_from_json(C, entry), mult);
    }
    const Json infinite = j.value("infinite", Json::array());
    if (static_cast<int>(infinite.size()) > C.infinite_place_count())
        throw io_error("divisor record lists more infinite multiplicities than the curve has places");
    for (size_t i = 0; i < infinite.size(); ++i) {
        int mult = infinite[i].get<int>();
        if (mult != 0) D.add(infinite_place(C, static_cast<int>(i)), mult);
    }
    return D;
}

Json fibermap_to_json(const FiberMap& m) {
    return Json{{"num", poly_to_json(m.num)}, {"den", poly_to_json(m.den)}};
}

FiberMap fibermap_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw io_error("map record must be an object with num and den coefficient lists");
    return FiberMap{poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
}

namespace {

std::vector<std::pair<std::string, std::string>> split_spec(const std::string& spec) {
    std::vector<std::pair<std::string, std::string>> fields;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        std::string field = spec.substr(start, comma - start);
        size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw io_error("point spec field \"" + field + "\" is not key=value");
        fields.emplace_back(field.substr(0, eq), field.substr(eq + 1));
        start = comma + 1;
    }
    return fields;
}

} // namespace

Place place_from_spec(const HyperCurve& C, const std::string& spec) {
    std::optional<QPoly> u, v;
    std::optional<Rat> x0, y0;
    std::optional<int> infinite;
    std::string kind;
    for (const auto& [key, value] : split_spec(spec)) {
        if (key == "u")
            u = poly_from_string(value);
        else if (key == "v")
            v = poly_from_string(value);
        else if (key == "x")
            x0 = parse_rat(value);
        else if (key == "y")
            y0 = parse_rat(value);
        else if (key == "kind")
            kind = value;
        else if (key == "infinite")
            infinite = static_cast<int>(parse_rat(value).get_num().get_si());
        else
            throw io_error("unknown point spec key: " + key);
    }
    if (infinite) {
        if (u || v || x0 || y0) throw io_error("infinite= excludes the finite point keys");
        return infinite_place(C, *infinite);
    }
    if (x0) {
        if (u) throw io_error("give either u= or x=, not both");
        u = QPoly::x() - QPoly(*x0);
    }
    if (y0) {
        if (v) throw io_error("give either v= or y=, not both");
        v = QPoly(*y0);
    }
    if (!u) throw io_error("point spec needs u=, x=, or infinite=");
    if (kind == "inert") {
        if (v) throw io_error("inert places have no v component");
        return make_inert_place(C, *u);
    }
    Place P = make_place(C, *u, v.value_or(QPoly()));
    if (!kind.empty() && kind_str(P.kind) != kind)
        throw io_error("point data has kind " + kind_str(P.kind) + ", spec declared " + kind);
    return P;
}

Json cover_to_json(const CoverSpec& spec) {
    Json j;
    j["source"] = curve_to_json(spec.source);
    j["target"] = curve_to_json(spec.target);
    j["x"] = Json{{"num", poly_to_json(spec.xnum)}, {"den", poly_to_json(spec.xden)}};
    j["y"] = Json{{"num", poly_to_json(spec.ynum)}, {"den", poly_to_json(spec.yden)}};
    if (spec.marked_infinite)
        j["marked"] = "oo";
    else if (spec.marked)
        j["marked"] = format_rat(*spec.marked);
    return j;
}

CoverSpec cover_from_json(const Json& j) {
    if (!j.is_object()) throw io_error("cover record must be an object");
    for (const char* field : {"source", "target", "x", "y"})
        if (!j.contains(field)) throw io_error(std::string("cover record is missing ") + field);
    CoverSpec spec;
    spec.source = curve_from_json(j.at("source"));
    spec.target = curve_from_json(j.at("target"));
    const Json& x = j.at("x");
    const Json& y = j.at("y");
    if (!x.is_object() || !x.contains("num") || !y.is_object() || !y.contains("num"))
        throw io_error("cover map components must be objects with num and den lists");
    spec.xnum = poly_from_json(x.at("num"));
    spec.xden = x.contains("den") ? poly_from_json(x.at("den")) : QPoly(1);
    spec.ynum = poly_from_json(y.at("num"));
    spec.yden = y.contains("den") ? poly_from_json(y.at("den")) : QPoly(1);
    if (j.contains("marked")) {
        std::string marked = j.at("marked").get<std::string>();
        if (marked == "oo")
            spec.marked_infinite = true;
        else
            spec.marked = parse_rat(marked);
    }
    return spec;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw io_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw io_error("write to " + path + " failed");
}

} // namespace hypell
