#include "spinprod/suite/serialize.hpp"

#include "spinprod/exact/solve.hpp"

#include <limits>
#include <sstream>

namespace spinprod::suite {

namespace {

json encode_integer(const exact::Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

exact::Integer decode_integer(const json& j) {
    if (j.is_number_integer()) return exact::Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const bool ok = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                        s.find('-', 1) == std::string::npos && s != "-";
        if (ok) return exact::Integer(s);
    }
    throw InputError("expected an integer, got " + j.dump());
}

}  // namespace

json encode_scalar(const GaussianRational& z) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return json::array({encode_integer(numerator(z.re())), encode_integer(denominator(z.re())),
                        encode_integer(numerator(z.im())), encode_integer(denominator(z.im()))});
}

GaussianRational decode_scalar(const json& j) {
    if (!j.is_array() || j.size() != 4) throw InputError("scalar must be [re_num, re_den, im_num, im_den], got " + j.dump());
    const auto re_den = decode_integer(j[1]);
    const auto im_den = decode_integer(j[3]);
    if (re_den <= 0 || im_den <= 0) throw InputError("scalar denominators must be positive: " + j.dump());
    return GaussianRational::from_parts(decode_integer(j[0]), re_den, decode_integer(j[2]), im_den);
}

json encode_matrix(const Matrix& m) {
    json out = json::array();
    for (const auto& z : m.entries()) out.push_back(encode_scalar(z));
    return out;
}

Matrix decode_matrix(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows * cols) {
        throw InputError("expected a flat list of " + std::to_string(rows * cols) + " entries");
    }
    std::vector<GaussianRational> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(decode_scalar(e));
    return {rows, cols, std::move(entries)};
}

json gamma_to_json(const clifford::GammaRep& rep) {
    json out;
    out["dim"] = rep.dim;
    out["size"] = rep.rep_size;
    json gammas = json::array();
    for (const auto& g : rep.gammas) gammas.push_back(encode_matrix(g));
    out["gammas"] = std::move(gammas);
    return out;
}

std::string gamma_to_text(const clifford::GammaRep& rep) {
    std::ostringstream os;
    os << "Cl(" << rep.signature.p << "," << rep.signature.q << ") dim " << rep.dim << ", size " << rep.rep_size
       << "\n";
    for (std::size_t a = 0; a < rep.gammas.size(); ++a) {
        os << "gamma_" << (a + 1) << ":\n" << rep.gammas[a].to_string();
    }
    if (rep.volume) os << "chirality:\n" << rep.volume->to_string();
    return os.str();
}

std::vector<Matrix> parse_scaling(const json& j, const std::vector<int>& dims) {
    if (!j.is_array() || j.size() != dims.size()) {
        throw InputError("scaling file must hold a list of " + std::to_string(dims.size()) + " matrices");
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const auto d = static_cast<std::size_t>(dims[i]);
        Matrix a = decode_matrix(j[i], d, d);
        for (const auto& z : a.entries()) {
            if (!z.is_real()) throw InputError("scaling matrix " + std::to_string(i + 1) + " has a complex entry");
        }
        if (exact::exact_rank(a) != d) throw InputError("scaling matrix " + std::to_string(i + 1) + " is singular");
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace spinprod::suite
