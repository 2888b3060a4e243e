#include "suitalab/holomap.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace suitalab {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;

cdouble ii(double re, double im) { return cdouble{re, im}; }

CMat json_to_cmat(const nlohmann::json& j) {
    int n = static_cast<int>(j.size());
    CMat m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = ii(j[r][c][0].get<double>(), j[r][c][1].get<double>());
    return m;
}

nlohmann::json cmat_to_json(const CMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c)
            row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

CVec json_to_cvec(const nlohmann::json& j) {
    CVec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = ii(j[i][0].get<double>(), j[i][1].get<double>());
    return v;
}

nlohmann::json cvec_to_json(const CVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back({v[i].real(), v[i].imag()});
    return a;
}
}  // namespace

struct HoloMap::Node {
    Variant variant = Variant::identity;
    int n = 2;
    // affine
    CMat linear;
    CVec offset;
    // dilation
    double delta = 1.0;
    // quadric shear over the 'z block
    CMat quad;
    // composition, applied left to right
    std::vector<HoloMap> parts;
};

HoloMap HoloMap::identity(int n) {
    auto node = std::make_shared<Node>();
    node->variant = Variant::identity;
    node->n = n;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::affine(const CMat& linear, const CVec& offset) {
    if (linear.dim() != offset.dim())
        throw std::invalid_argument("HoloMap::affine: dimension mismatch");
    if (std::abs(linear.det()) == 0.0)
        throw std::invalid_argument("HoloMap::affine: singular linear part");
    auto node = std::make_shared<Node>();
    node->variant = Variant::affine;
    node->n = linear.dim();
    node->linear = linear;
    node->offset = offset;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::translation(const CVec& offset) {
    return affine(CMat::identity(offset.dim()), offset);
}

HoloMap HoloMap::homothety(const CVec& q, double r) {
    if (r <= 0.0) throw std::invalid_argument("HoloMap::homothety: ratio must be positive");
    // v -> r (v - q) + q = r v + (1 - r) q
    CMat lin = CMat::identity(q.dim());
    for (int i = 0; i < q.dim(); ++i) lin.at(i, i) = r;
    return affine(lin, cdouble{1.0 - r, 0.0} * q);
}

HoloMap HoloMap::cayley(int n) {
    auto node = std::make_shared<Node>();
    node->variant = Variant::cayley;
    node->n = n;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::cayley_inverse(int n) {
    auto node = std::make_shared<Node>();
    node->variant = Variant::cayley_inverse;
    node->n = n;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::dilation(double delta, int n) {
    if (delta <= 0.0) throw std::invalid_argument("HoloMap::dilation: delta must be positive");
    auto node = std::make_shared<Node>();
    node->variant = Variant::dilation;
    node->n = n;
    node->delta = delta;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::quadric_shear(const CMat& tangent_coeffs, int n) {
    if (tangent_coeffs.dim() != n - 1)
        throw std::invalid_argument("HoloMap::quadric_shear: coefficient block must be (n-1)x(n-1)");
    auto node = std::make_shared<Node>();
    node->variant = Variant::quadric;
    node->n = n;
    node->quad = tangent_coeffs;
    return HoloMap(std::move(node));
}

HoloMap HoloMap::compose(std::vector<HoloMap> maps) {
    if (maps.empty()) throw std::invalid_argument("HoloMap::compose: empty chain");
    if (maps.size() == 1) return maps.front();
    int n = maps.front().dim();
    for (const auto& m : maps)
        if (m.dim() != n) throw std::invalid_argument("HoloMap::compose: dimension mismatch");
    auto node = std::make_shared<Node>();
    node->variant = Variant::composition;
    node->n = n;
    node->parts = std::move(maps);
    return HoloMap(std::move(node));
}

int HoloMap::dim() const { return node_->n; }
HoloMap::Variant HoloMap::variant() const { return node_->variant; }

CVec HoloMap::operator()(const CVec& z) const {
    const Node& nd = *node_;
    if (z.dim() != nd.n) throw std::invalid_argument("HoloMap: point dimension mismatch");
    switch (nd.variant) {
        case Variant::identity:
            return z;
        case Variant::affine:
            return nd.linear * z + nd.offset;
        case Variant::cayley: {
            cdouble zn = z.last();
            cdouble d = cdouble{1.0, 0.0} - zn;
            if (std::abs(d) == 0.0) throw std::domain_error("cayley: pole at z_n = 1");
            CVec w(nd.n);
            for (int i = 0; i < nd.n - 1; ++i) w[i] = kSqrt2 * z[i] / d;
            w[nd.n - 1] = (cdouble{1.0, 0.0} + zn) / d;
            return w;
        }
        case Variant::cayley_inverse: {
            cdouble wn = z.last();
            cdouble d = cdouble{1.0, 0.0} + wn;
            if (std::abs(d) == 0.0) throw std::domain_error("cayley_inverse: pole at w_n = -1");
            CVec w(nd.n);
            for (int i = 0; i < nd.n - 1; ++i) w[i] = kSqrt2 * z[i] / d;
            w[nd.n - 1] = (wn - cdouble{1.0, 0.0}) / d;
            return w;
        }
        case Variant::dilation: {
            CVec w(nd.n);
            double s = std::sqrt(nd.delta);
            for (int i = 0; i < nd.n - 1; ++i) w[i] = z[i] / s;
            w[nd.n - 1] = z.last() / nd.delta;
            return w;
        }
        case Variant::quadric: {
            CVec w = z;
            cdouble q = 0.0;
            for (int i = 0; i < nd.n - 1; ++i)
                for (int j = 0; j < nd.n - 1; ++j) q += nd.quad.at(i, j) * z[i] * z[j];
            w[nd.n - 1] += q;
            return w;
        }
        case Variant::composition: {
            CVec w = z;
            for (const auto& m : nd.parts) w = m(w);
            return w;
        }
    }
    throw std::logic_error("HoloMap: unreachable");
}

CMat HoloMap::jacobian(const CVec& z) const {
    const Node& nd = *node_;
    if (z.dim() != nd.n) throw std::invalid_argument("HoloMap: point dimension mismatch");
    switch (nd.variant) {
        case Variant::identity:
            return CMat::identity(nd.n);
        case Variant::affine:
            return nd.linear;
        case Variant::cayley: {
            cdouble d = cdouble{1.0, 0.0} - z.last();
            if (std::abs(d) == 0.0) throw std::domain_error("cayley: pole at z_n = 1");
            CMat m(nd.n);
            for (int i = 0; i < nd.n - 1; ++i) {
                m.at(i, i) = kSqrt2 / d;
                m.at(i, nd.n - 1) = kSqrt2 * z[i] / (d * d);
            }
            m.at(nd.n - 1, nd.n - 1) = 2.0 / (d * d);
            return m;
        }
        case Variant::cayley_inverse: {
            cdouble d = cdouble{1.0, 0.0} + z.last();
            if (std::abs(d) == 0.0) throw std::domain_error("cayley_inverse: pole at w_n = -1");
            CMat m(nd.n);
            for (int i = 0; i < nd.n - 1; ++i) {
                m.at(i, i) = kSqrt2 / d;
                m.at(i, nd.n - 1) = -kSqrt2 * z[i] / (d * d);
            }
            m.at(nd.n - 1, nd.n - 1) = 2.0 / (d * d);
            return m;
        }
        case Variant::dilation: {
            CMat m(nd.n);
            double s = std::sqrt(nd.delta);
            for (int i = 0; i < nd.n - 1; ++i) m.at(i, i) = 1.0 / s;
            m.at(nd.n - 1, nd.n - 1) = 1.0 / nd.delta;
            return m;
        }
        case Variant::quadric: {
            CMat m = CMat::identity(nd.n);
            for (int i = 0; i < nd.n - 1; ++i) {
                cdouble g = 0.0;
                for (int j = 0; j < nd.n - 1; ++j)
                    g += (nd.quad.at(i, j) + nd.quad.at(j, i)) * z[j];
                m.at(nd.n - 1, i) = g;
            }
            return m;
        }
        case Variant::composition: {
            CVec w = z;
            CMat jac = CMat::identity(nd.n);
            for (const auto& m : nd.parts) {
                jac = m.jacobian(w) * jac;
                w = m(w);
            }
            return jac;
        }
    }
    throw std::logic_error("HoloMap: unreachable");
}

cdouble HoloMap::jacobian_det(const CVec& z) const {
    const Node& nd = *node_;
    switch (nd.variant) {
        case Variant::identity:
            return 1.0;
        case Variant::quadric:
            return 1.0;
        case Variant::dilation:
            // diag(delta^{-1/2} x (n-1), delta^{-1})
            return std::pow(nd.delta, -0.5 * (nd.n + 1));
        case Variant::cayley: {
            cdouble d = cdouble{1.0, 0.0} - z.last();
            if (std::abs(d) == 0.0) throw std::domain_error("cayley: pole at z_n = 1");
            return std::pow(kSqrt2, nd.n - 1) * 2.0 / std::pow(d, nd.n + 1);
        }
        case Variant::cayley_inverse: {
            cdouble d = cdouble{1.0, 0.0} + z.last();
            if (std::abs(d) == 0.0) throw std::domain_error("cayley_inverse: pole at w_n = -1");
            return std::pow(kSqrt2, nd.n - 1) * 2.0 / std::pow(d, nd.n + 1);
        }
        case Variant::affine:
            return nd.linear.det();
        case Variant::composition: {
            CVec w = z;
            cdouble d = 1.0;
            for (const auto& m : nd.parts) {
                d *= m.jacobian_det(w);
                w = m(w);
            }
            return d;
        }
    }
    throw std::logic_error("HoloMap: unreachable");
}

HoloMap HoloMap::inverse() const {
    const Node& nd = *node_;
    switch (nd.variant) {
        case Variant::identity:
            return *this;
        case Variant::affine: {
            CMat inv = nd.linear.inverse();
            return affine(inv, -(inv * nd.offset));
        }
        case Variant::cayley:
            return cayley_inverse(nd.n);
        case Variant::cayley_inverse:
            return cayley(nd.n);
        case Variant::dilation:
            return dilation(1.0 / nd.delta, nd.n);
        case Variant::quadric: {
            CMat neg(nd.n - 1);
            for (int i = 0; i < nd.n - 1; ++i)
                for (int j = 0; j < nd.n - 1; ++j) neg.at(i, j) = -nd.quad.at(i, j);
            return quadric_shear(neg, nd.n);
        }
        case Variant::composition: {
            std::vector<HoloMap> rev;
            rev.reserve(nd.parts.size());
            for (auto it = nd.parts.rbegin(); it != nd.parts.rend(); ++it)
                rev.push_back(it->inverse());
            return compose(std::move(rev));
        }
    }
    throw std::logic_error("HoloMap: unreachable");
}

nlohmann::json HoloMap::to_json() const {
    const Node& nd = *node_;
    nlohmann::json j;
    j["n"] = nd.n;
    switch (nd.variant) {
        case Variant::identity:
            j["variant"] = "identity";
            break;
        case Variant::affine:
            j["variant"] = "affine";
            j["linear"] = cmat_to_json(nd.linear);
            j["offset"] = cvec_to_json(nd.offset);
            break;
        case Variant::cayley:
            j["variant"] = "cayley";
            break;
        case Variant::cayley_inverse:
            j["variant"] = "cayley_inverse";
            break;
        case Variant::dilation:
            j["variant"] = "dilation";
            j["delta"] = nd.delta;
            break;
        case Variant::quadric:
            j["variant"] = "quadric";
            j["coeffs"] = cmat_to_json(nd.quad);
            break;
        case Variant::composition: {
            j["variant"] = "composition";
            nlohmann::json parts = nlohmann::json::array();
            for (const auto& m : nd.parts) parts.push_back(m.to_json());
            j["maps"] = parts;
            break;
        }
    }
    return j;
}

HoloMap HoloMap::from_json(const nlohmann::json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    int n = j.at("n").get<int>();
    if (variant == "identity") return identity(n);
    if (variant == "affine") return affine(json_to_cmat(j.at("linear")), json_to_cvec(j.at("offset")));
    if (variant == "cayley") return cayley(n);
    if (variant == "cayley_inverse") return cayley_inverse(n);
    if (variant == "dilation") return dilation(j.at("delta").get<double>(), n);
    if (variant == "quadric") return quadric_shear(json_to_cmat(j.at("coeffs")), n);
    if (variant == "composition") {
        std::vector<HoloMap> parts;
        for (const auto& pj : j.at("maps")) parts.push_back(from_json(pj));
        return compose(std::move(parts));
    }
    throw std::invalid_argument("HoloMap::from_json: unknown variant " + variant);
}

CVec cayley(const CVec& z) { return HoloMap::cayley(z.dim())(z); }
CVec cayley_inverse(const CVec& w) { return HoloMap::cayley_inverse(w.dim())(w); }

}  // namespace suitalab
