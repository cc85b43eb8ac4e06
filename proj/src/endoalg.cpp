#include "ccmk/endoalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ccmk::endoalg {

// ---------------------------------------------------------------------------
// Modules

ModuleDescriptor ModuleDescriptor::ideal_power(int n, int i) {
    if (n < 1 || i < 0 || i >= n)
        throw std::invalid_argument("m^" + std::to_string(i) + " needs 0 <= i < n = " + std::to_string(n));
    return ModuleDescriptor(ModuleKind::IdealPower, n, i, n);
}

ModuleDescriptor ModuleDescriptor::overring(int n, int i, int precision) {
    if (n < 0 || i < 0 || i > n)
        throw std::invalid_argument("R_" + std::to_string(i) + " needs 0 <= i <= n = " + std::to_string(n));
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    return ModuleDescriptor(ModuleKind::Overring, n, i, precision);
}

NumericalSemigroup ModuleDescriptor::semigroup() const {
    if (kind_ == ModuleKind::IdealPower) return NumericalSemigroup::naturals();
    return NumericalSemigroup::two_generated(n_ - index_);
}

bool ModuleDescriptor::in_support(int e) const {
    if (kind_ == ModuleKind::IdealPower) return e >= index_ && e < n_;
    return semigroup().contains(e);
}

std::vector<int> ModuleDescriptor::generators() const {
    if (kind_ == ModuleKind::IdealPower) return {index_};
    return {0, 2 * (n_ - index_) + 1};
}

int ModuleDescriptor::conductor() const {
    if (kind_ == ModuleKind::IdealPower) return n_;
    return semigroup().conductor();
}

std::string ModuleDescriptor::name() const {
    if (kind_ == ModuleKind::IdealPower) return "m^" + std::to_string(index_);
    return "R_" + std::to_string(index_);
}

ModuleList truncated_summands(int n) {
    ModuleList out;
    for (int i = 0; i < n; ++i) out.push_back(ModuleDescriptor::ideal_power(n, i));
    return out;
}

ModuleList a2n_summands(int n, int precision) {
    ModuleList out;
    for (int i = 0; i <= n; ++i) out.push_back(ModuleDescriptor::overring(n, i, precision));
    return out;
}

namespace {

void check_pair(const ModuleDescriptor& source, const ModuleDescriptor& target) {
    if (source.kind() != target.kind() || source.n() != target.n())
        throw std::invalid_argument("modules " + source.name() + " and " + target.name() +
                                    " live over different rings");
}

int max_generator(const ModuleDescriptor& m) {
    const auto g = m.generators();
    return *std::max_element(g.begin(), g.end());
}

/// Drops the part of f that acts as zero on source.
TruncatedSeries reduce_multiplier(const TruncatedSeries& f, const ModuleDescriptor& source) {
    if (source.kind() != ModuleKind::IdealPower) return f;
    TruncatedSeries r = f;
    const Scalar zero(f.field(), 0);
    for (int e = source.n() - source.index(); e < r.precision(); ++e) r.set_coefficient(e, zero);
    return r;
}

}  // namespace

bool hom_membership(const TruncatedSeries& f, const ModuleDescriptor& source, const ModuleDescriptor& target) {
    check_pair(source, target);
    if (source.kind() == ModuleKind::IdealPower) {
        for (int e : f.support()) {
            const int image = e + source.index();
            if (image < source.n() && !target.in_support(image)) return false;
        }
        return true;
    }
    const int needed = target.conductor() + max_generator(source);
    if (f.precision() < needed)
        throw InsufficientPrecision("deciding maps " + source.name() + " -> " + target.name() +
                                    " needs precision >= " + std::to_string(needed) + ", have " +
                                    std::to_string(f.precision()));
    const auto gens = source.generators();
    for (int e : f.support())
        for (int g : gens)
            if (!target.in_support(e + g)) return false;
    return true;
}

std::vector<int> hom_monomial_basis(const ModuleDescriptor& source, const ModuleDescriptor& target,
                                    int max_degree) {
    check_pair(source, target);
    std::vector<int> out;
    if (source.kind() == ModuleKind::IdealPower) {
        const int lo = std::max(target.index() - source.index(), 0);
        for (int a = lo; a < source.n() - source.index(); ++a) out.push_back(a);
        return out;
    }
    const int bound = max_degree < 0 ? source.precision() : std::min(max_degree, source.precision());
    const auto gens = source.generators();
    for (int a = 0; a < bound; ++a)
        if (std::all_of(gens.begin(), gens.end(), [&](int g) { return target.in_support(a + g); }))
            out.push_back(a);
    return out;
}

HomElement HomElement::make(const ModuleDescriptor& source, const ModuleDescriptor& target,
                            TruncatedSeries multiplier) {
    if (!hom_membership(multiplier, source, target))
        throw MembershipError("multiplication by " + multiplier.to_string() + " does not map " +
                              source.name() + " into " + target.name());
    return HomElement{source, target, reduce_multiplier(multiplier, source)};
}

HomElement HomElement::identity(const ModuleDescriptor& m, const Field& f) {
    return make(m, m, TruncatedSeries::one(f, m.precision()));
}

HomElement HomElement::inclusion(const ModuleDescriptor& source, const ModuleDescriptor& target, const Field& f) {
    return make(source, target, TruncatedSeries::one(f, source.precision()));
}

// ---------------------------------------------------------------------------
// Matrices

EndoMatrix::EndoMatrix(ModuleList summands, std::vector<TruncatedSeries> entries)
    : summands_(std::move(summands)), field_(Field::rationals()) {
    const std::size_t s = summands_.size();
    if (s == 0) throw std::invalid_argument("endomorphism matrix needs at least one summand");
    if (entries.size() != s * s)
        throw std::invalid_argument("expected " + std::to_string(s * s) + " entries, got " +
                                    std::to_string(entries.size()));
    field_ = entries.front().field();
    entries_.reserve(entries.size());
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            TruncatedSeries f = std::move(entries[i * s + j]);
            if (!(f.field() == field_)) throw std::invalid_argument("entries over different fields");
            const auto& src = summands_[j];
            if (f.precision() < src.precision())
                throw InsufficientPrecision("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") has precision " + std::to_string(f.precision()) +
                                            " below " + std::to_string(src.precision()));
            f = f.truncated(src.precision());
            entries_.push_back(HomElement::make(src, summands_[i], std::move(f)).multiplier);
        }
    }
}

EndoMatrix EndoMatrix::zero(const ModuleList& summands, const Field& f) {
    std::vector<TruncatedSeries> e;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j)
            e.push_back(TruncatedSeries::zero(f, summands[j].precision()));
    return EndoMatrix(summands, std::move(e));
}

EndoMatrix EndoMatrix::identity(const ModuleList& summands, const Field& f) {
    std::vector<TruncatedSeries> d;
    for (const auto& m : summands) d.push_back(TruncatedSeries::one(f, m.precision()));
    return diagonal(summands, d);
}

EndoMatrix EndoMatrix::scalar(const ModuleList& summands, const TruncatedSeries& a) {
    return diagonal(summands, std::vector<TruncatedSeries>(summands.size(), a));
}

EndoMatrix EndoMatrix::diagonal(const ModuleList& summands, const std::vector<TruncatedSeries>& d) {
    if (d.size() != summands.size()) throw std::invalid_argument("diagonal length mismatch");
    if (d.empty()) throw std::invalid_argument("endomorphism matrix needs at least one summand");
    const Field f = d.front().field();
    std::vector<TruncatedSeries> e;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j)
            e.push_back(i == j ? d[i] : TruncatedSeries::zero(f, summands[j].precision()));
    return EndoMatrix(summands, std::move(e));
}

HomElement EndoMatrix::hom(std::size_t i, std::size_t j) const {
    return HomElement{summands_[j], summands_[i], entry(i, j)};
}

EndoMatrix EndoMatrix::with_entry(std::size_t i, std::size_t j, const TruncatedSeries& f) const {
    std::vector<TruncatedSeries> e = entries_;
    e.at(i * size() + j) = f;
    return EndoMatrix(summands_, std::move(e));
}

void EndoMatrix::check_same_shape(const EndoMatrix& o) const {
    if (!(summands_ == o.summands_)) throw std::invalid_argument("matrices over different summand lists");
    if (!(field_ == o.field_)) throw std::invalid_argument("matrices over different fields");
}

EndoMatrix EndoMatrix::operator-() const {
    std::vector<TruncatedSeries> e;
    for (const auto& x : entries_) e.push_back(-x);
    return EndoMatrix(summands_, std::move(e));
}

EndoMatrix operator+(const EndoMatrix& a, const EndoMatrix& b) {
    a.check_same_shape(b);
    std::vector<TruncatedSeries> e;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) e.push_back(a.entries_[k] + b.entries_[k]);
    return EndoMatrix(a.summands_, std::move(e));
}

EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b) {
    return a + (-b);
}

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b) {
    a.check_same_shape(b);
    const std::size_t s = a.size();
    std::vector<TruncatedSeries> e;
    e.reserve(s * s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            TruncatedSeries acc = TruncatedSeries::zero(a.field_, a.summands_[j].precision());
            for (std::size_t k = 0; k < s; ++k) {
                const auto& x = a.entry(i, k);
                const auto& y = b.entry(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                acc += x * y;
            }
            e.push_back(std::move(acc));
        }
    }
    return EndoMatrix(a.summands_, std::move(e));
}

bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
    if (!(a.summands_ == b.summands_) || !(a.field_ == b.field_)) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const EndoMatrix& a, const EndoMatrix& b) {
    if (!(a.summands() == b.summands())) throw std::invalid_argument("matrices over different summand lists");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a.entry(i, j) == b.entry(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

std::string EndoMatrix::to_string() const {
    const std::string var = summands_.front().kind() == ModuleKind::IdealPower ? "x" : "t";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < size(); ++j) {
            if (j) os << ", ";
            os << entry(i, j).to_string(var);
        }
    }
    os << "]";
    return os.str();
}

namespace {

/// Index groups of mutually isomorphic summands.
std::vector<std::vector<std::size_t>> isomorphism_classes(const ModuleList& summands) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return summands[c.front()] == summands[i]; });
        if (it == classes.end()) classes.push_back({i});
        else it->push_back(i);
    }
    return classes;
}

bool residues_invertible(std::vector<std::vector<Scalar>> m) {
    const std::size_t s = m.size();
    for (std::size_t c = 0; c < s; ++c) {
        std::size_t p = c;
        while (p < s && m[p][c].is_zero()) ++p;
        if (p == s) return false;
        std::swap(m[p], m[c]);
        const Scalar inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < s; ++r) {
            if (m[r][c].is_zero()) continue;
            const Scalar factor = m[r][c] * inv;
            for (std::size_t k = c; k < s; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    return true;
}

}  // namespace

// End(L)/J is the product of the matrix algebras M_l(k) over the isomorphism
// classes of summands, read off from constant terms. With pairwise
// non-isomorphic summands this is the diagonal criterion.
bool is_unit(const EndoMatrix& a) {
    for (const auto& cls : isomorphism_classes(a.summands())) {
        std::vector<std::vector<Scalar>> residue;
        for (std::size_t r : cls) {
            residue.emplace_back();
            for (std::size_t c : cls) residue.back().push_back(a.entry(r, c).constant_term());
        }
        if (!residues_invertible(std::move(residue))) return false;
    }
    return true;
}

bool in_radical(const EndoMatrix& a) {
    for (const auto& cls : isomorphism_classes(a.summands()))
        for (std::size_t r : cls)
            for (std::size_t c : cls)
                if (!a.entry(r, c).constant_term().is_zero()) return false;
    return true;
}

EndoMatrix elementary_d(const ModuleList& summands, std::size_t j, const TruncatedSeries& alpha) {
    if (j >= summands.size()) throw std::out_of_range("d_j index out of range");
    if (alpha.precision() > 0 && alpha.constant_term().is_zero())
        throw NotAUnit("d_j needs an automorphism of " + summands[j].name());
    return EndoMatrix::identity(summands, alpha.field()).with_entry(j, j, alpha);
}

EndoMatrix elementary_e(const ModuleList& summands, std::size_t i, std::size_t j, const TruncatedSeries& beta) {
    if (i >= summands.size() || j >= summands.size()) throw std::out_of_range("e_ij index out of range");
    if (i == j) throw std::invalid_argument("e_ij needs i != j");
    return EndoMatrix::identity(summands, beta.field()).with_entry(i, j, beta);
}

// ---------------------------------------------------------------------------
// Tilde construction

ModuleList expand_multiplicities(const ModuleList& L, const std::vector<int>& multiplicities) {
    if (multiplicities.size() != L.size()) throw std::invalid_argument("one multiplicity per summand");
    ModuleList out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (multiplicities[i] < 0) throw std::invalid_argument("negative multiplicity");
        for (int c = 0; c < multiplicities[i]; ++c) out.push_back(L[i]);
    }
    if (out.empty()) throw std::invalid_argument("all multiplicities are zero");
    return out;
}

int tilde_q(const std::vector<int>& multiplicities) {
    if (multiplicities.empty()) return 0;
    return *std::max_element(multiplicities.begin(), multiplicities.end());
}

EndoMatrix tilde(const ModuleList& L, const std::vector<int>& multiplicities, const EndoMatrix& alpha) {
    const ModuleList lp = expand_multiplicities(L, multiplicities);
    if (!(alpha.summands() == lp)) throw std::invalid_argument("alpha does not act on L'");
    const int q = tilde_q(multiplicities);
    const std::size_t s = L.size();

    // Position of copy c of summand i inside L'.
    std::vector<std::size_t> offset(s, 0);
    for (std::size_t i = 1; i < s; ++i) offset[i] = offset[i - 1] + static_cast<std::size_t>(multiplicities[i - 1]);

    ModuleList big;
    for (int c = 0; c < q; ++c) big.insert(big.end(), L.begin(), L.end());
    const std::size_t dim = big.size();
    std::vector<TruncatedSeries> e;
    e.reserve(dim * dim);
    for (std::size_t row = 0; row < dim; ++row) {
        const int c = static_cast<int>(row / s);
        const std::size_t i = row % s;
        for (std::size_t col = 0; col < dim; ++col) {
            const int c2 = static_cast<int>(col / s);
            const std::size_t j = col % s;
            const bool row_in = c < multiplicities[i];
            const bool col_in = c2 < multiplicities[j];
            if (row_in && col_in) {
                e.push_back(alpha.entry(offset[i] + static_cast<std::size_t>(c), offset[j] + static_cast<std::size_t>(c2)));
            } else if (!row_in && !col_in && row == col) {
                e.push_back(TruncatedSeries::one(alpha.field(), big[col].precision()));
            } else {
                e.push_back(TruncatedSeries::zero(alpha.field(), big[col].precision()));
            }
        }
    }
    return EndoMatrix(std::move(big), std::move(e));
}

// ---------------------------------------------------------------------------
// Determinant evaluation and Phi

TruncatedSeries det_evaluation(const EndoMatrix& alpha) {
    for (const auto& m : alpha.summands())
        if (m.kind() != ModuleKind::Overring)
            throw std::invalid_argument("det_evaluation is defined for R_0..R_n summands");
    const std::size_t s = alpha.size();
    if (s > 20) throw std::invalid_argument("too many summands for det_evaluation");
    const int precision = alpha.summands().front().precision();
    const Field& f = alpha.field();

    // minors[mask]: determinant of rows 0..popcount(mask)-1 against the
    // columns in mask, expanded along the last row.
    std::vector<std::optional<TruncatedSeries>> minors(std::size_t{1} << s);
    minors[0] = TruncatedSeries::one(f, precision);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const int rows = std::popcount(mask);
        const std::size_t r = static_cast<std::size_t>(rows - 1);
        TruncatedSeries acc = TruncatedSeries::zero(f, precision);
        int pos = 0;
        for (std::size_t c = 0; c < s; ++c) {
            if (!(mask & (std::size_t{1} << c))) continue;
            const auto& a = alpha.entry(r, c);
            const auto& sub = *minors[mask & ~(std::size_t{1} << c)];
            if (!a.is_zero() && !sub.is_zero()) {
                TruncatedSeries term = a * sub;
                if ((static_cast<int>(r) + pos) % 2 == 0) acc += term;
                else acc -= term;
            }
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return *minors.back();
}

PhiValue phi_map(const EndoMatrix& alpha) {
    if (!is_unit(alpha)) throw NotAUnit("phi is defined on automorphisms only");
    const TruncatedSeries det = det_evaluation(alpha);
    PhiValue v{{}, det};
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) v.residues.push_back(alpha.entry(i, i).constant_term());
    return v;
}

PhiValue phi_product(const PhiValue& a, const PhiValue& b) {
    if (a.residues.size() != b.residues.size()) throw std::invalid_argument("phi values of different rank");
    PhiValue v{{}, a.det * b.det};
    for (std::size_t i = 0; i < a.residues.size(); ++i) v.residues.push_back(a.residues[i] * b.residues[i]);
    return v;
}

// ---------------------------------------------------------------------------
// Factorizations

FactorizationCase FactorizationCase::truncated(int n, int i, TruncatedSeries r) {
    if (n < 2 || i < 1 || i > n - 1)
        throw std::invalid_argument("truncated factorization needs n >= 2 and 1 <= i <= n-1");
    if (r.precision() < n) throw std::invalid_argument("r must be known modulo x^n");
    r = r.truncated(n);
    if (!r.constant_term().is_one()) throw std::invalid_argument("r must lie in 1 + xR");
    return FactorizationCase{Kind::Truncated, n, i, std::nullopt, std::move(r)};
}

FactorizationCase FactorizationCase::a2n(int n, int i, std::optional<int> j, TruncatedSeries f) {
    if (n < 1 || i < 1 || i > n) throw std::invalid_argument("a2n factorization needs 1 <= i <= n");
    if (j && (*j <= i || *j > n)) throw std::invalid_argument("a2n factorization needs i < j <= n");
    if (!f.constant_term().is_one()) throw std::invalid_argument("f must lie in 1 + m");
    const auto sg = NumericalSemigroup::two_generated(n - i + 1);
    for (int e : f.support())
        if (!sg.contains(e))
            throw std::invalid_argument("f must lie in 1 + m_" + std::to_string(i - 1) + "; t^" +
                                        std::to_string(e) + " is not in " + sg.to_string());
    return FactorizationCase{Kind::A2n, n, i, j, std::move(f)};
}

std::string FactorizationCase::label() const {
    std::ostringstream os;
    if (kind == Kind::Truncated) {
        os << "truncated(n=" << n << ", i=" << i << ", r=" << r.to_string("x") << ")";
    } else {
        os << "a2n(n=" << n << ", i=" << i;
        if (j) os << ", j=" << *j;
        os << ", f=" << r.to_string("t") << ")";
    }
    return os.str();
}

namespace {

std::string describe_difference(const EndoMatrix& lhs, const EndoMatrix& rhs, const std::string& var) {
    const auto d = first_difference(lhs, rhs);
    if (!d) return {};
    std::ostringstream os;
    os << "entry (" << d->first + 1 << "," << d->second + 1 << "): lhs = "
       << lhs.entry(d->first, d->second).to_string(var) << ", rhs = " << rhs.entry(d->first, d->second).to_string(var);
    return os.str();
}

}  // namespace

FactorizationVerdict verify_factorization(const FactorizationCase& c) {
    FactorizationVerdict v;
    v.label = c.label();
    const Field& f = c.r.field();
    const std::size_t a = static_cast<std::size_t>(c.i - 1);
    const std::size_t b = a + 1;

    if (c.kind == FactorizationCase::Kind::Truncated) {
        const ModuleList L = truncated_summands(c.n);
        const TruncatedSeries r = c.r.truncated(c.n);
        const TruncatedSeries s = r.inverse();
        const TruncatedSeries one = TruncatedSeries::one(f, c.n);
        const EndoMatrix lhs = elementary_d(L, a, r) * elementary_d(L, b, s);
        const EndoMatrix rhs = elementary_e(L, b, a, s - one) * elementary_e(L, a, b, one) *
                               elementary_e(L, b, a, r - one) * elementary_e(L, a, b, -s);
        v.identity = "d_i(r) d_{i+1}(r^-1) = e_{i+1,i}(r^-1 - 1) e_{i,i+1}(iota) e_{i+1,i}(r - 1) e_{i,i+1}(-r^-1 iota)";
        if (!(lhs == rhs)) {
            v.counterexample = describe_difference(lhs, rhs, "x");
            return v;
        }
        if (c.i == c.n - 1) {
            // r^-1 acts trivially on the socle, so d_{n-1}(r) = d_{n-1}(r) d_n(r^-1).
            const EndoMatrix d_only = elementary_d(L, a, r);
            v.identity += "; d_{n-1}(r) = d_{n-1}(r) d_n(r^-1)";
            if (!(d_only == lhs)) {
                v.counterexample = describe_difference(d_only, lhs, "x");
                return v;
            }
        }
        v.holds = true;
        return v;
    }

    const int precision = c.r.precision();
    if (precision < 4 * c.n + 2)
        throw InsufficientPrecision("a2n factorization with n = " + std::to_string(c.n) + " needs precision >= " +
                                    std::to_string(4 * c.n + 2) + ", have " + std::to_string(precision));
    const ModuleList L = a2n_summands(c.n, precision);
    const TruncatedSeries& fr = c.r;
    const TruncatedSeries s = fr.inverse();
    const TruncatedSeries one = TruncatedSeries::one(f, precision);

    // X = e_{p,p+1}(f^-1 - 1) e_{p+1,p}(iota) e_{p,p+1}(f - 1) e_{p+1,p}(-f^-1 iota)
    auto product = [&](std::size_t p) {
        const std::size_t q = p + 1;
        return elementary_e(L, p, q, s - one) * elementary_e(L, q, p, one) * elementary_e(L, p, q, fr - one) *
               elementary_e(L, q, p, -s);
    };
    auto product_inverse = [&](std::size_t p) {
        const std::size_t q = p + 1;
        return elementary_e(L, q, p, s) * elementary_e(L, p, q, one - fr) * elementary_e(L, q, p, -one) *
               elementary_e(L, p, q, one - s);
    };

    EndoMatrix lhs = EndoMatrix::identity(L, f);
    EndoMatrix rhs = lhs;
    if (!c.j) {
        lhs = elementary_d(L, a, fr) * elementary_d(L, b, s);
        rhs = product_inverse(a);
        v.identity = "delta_i = d_i(f) d_{i+1}(f^-1) = [e_{i,i+1}(f^-1 - 1) e_{i+1,i}(iota) e_{i,i+1}(f - 1) e_{i+1,i}(-f^-1 iota)]^-1";
        if (!(product(a) * rhs == EndoMatrix::identity(L, f))) {
            v.counterexample = "bracketed product times its stated inverse is not the identity";
            return v;
        }
    } else {
        const std::size_t ja = static_cast<std::size_t>(*c.j - 1);
        lhs = elementary_d(L, ja, s) * elementary_d(L, ja + 1, fr);
        rhs = product(ja);
        v.identity = "gamma_j = d_j(f^-1) d_{j+1}(f) = e_{j,j+1}(f^-1 - 1) e_{j+1,j}(iota) e_{j,j+1}(f - 1) e_{j+1,j}(-f^-1 iota)";
    }
    if (!(lhs == rhs)) {
        v.counterexample = describe_difference(lhs, rhs, "t");
        return v;
    }
    v.holds = true;
    return v;
}

// ---------------------------------------------------------------------------
// Linear algebra over the field

namespace {

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b,
                                                const Field& f) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Scalar inv = a[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar factor = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!a[r][k].is_zero()) a[i][k] -= factor * a[r][k];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(f, 0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace

std::optional<EndoMatrix> solve_right_inverse(const EndoMatrix& alpha) {
    const ModuleList& L = alpha.summands();
    for (const auto& m : L)
        if (m.kind() != ModuleKind::IdealPower)
            throw std::invalid_argument("solve_right_inverse needs finite-dimensional Hom spaces");
    const Field& f = alpha.field();
    const std::size_t s = L.size();

    struct Coord {
        std::size_t i, j;
        int a;
    };
    std::vector<Coord> basis;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            for (int a : hom_monomial_basis(L[j], L[i])) basis.push_back({i, j, a});
    const std::size_t dim = basis.size();
    auto index_of = [&](std::size_t i, std::size_t j, int a) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < dim; ++k)
            if (basis[k].i == i && basis[k].j == j && basis[k].a == a) return k;
        return std::nullopt;
    };

    // Column k holds the coordinates of alpha * E_k, E_k the k-th basis map.
    std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(dim, Scalar(f, 0)));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto& bk = basis[k];
        const std::size_t j = bk.j;
        for (std::size_t i = 0; i < s; ++i) {
            const auto& a = alpha.entry(i, bk.i);
            if (a.is_zero()) continue;
            const TruncatedSeries prod =
                HomElement::make(L[j], L[i], a * TruncatedSeries::monomial(Scalar(f, 1), bk.a, L[j].precision()))
                    .multiplier;
            for (int e : prod.support()) {
                const auto row = index_of(i, j, e);
                if (!row) throw std::logic_error("product left the monomial basis");
                m[*row][k] += prod.coefficient(e);
            }
        }
    }
    std::vector<Scalar> rhs(dim, Scalar(f, 0));
    for (std::size_t i = 0; i < s; ++i) rhs[*index_of(i, i, 0)] = Scalar(f, 1);

    const auto x = solve_linear(std::move(m), std::move(rhs), f);
    if (!x) return std::nullopt;
    EndoMatrix beta = EndoMatrix::zero(L, f);
    for (std::size_t k = 0; k < dim; ++k) {
        if ((*x)[k].is_zero()) continue;
        const auto& bk = basis[k];
        beta = beta.with_entry(bk.i, bk.j,
                               beta.entry(bk.i, bk.j) + TruncatedSeries::monomial((*x)[k], bk.a, L[bk.j].precision()));
    }
    if (!(alpha * beta == EndoMatrix::identity(L, f))) throw std::logic_error("linear solve produced a non-inverse");
    return beta;
}

// ---------------------------------------------------------------------------
// Random elements

namespace {

/// Exponent range sampled for curve maps; everything past the conductor is
/// in every module, so a short window above it is representative.
int sample_window(const ModuleDescriptor& source, const ModuleDescriptor& target) {
    return std::min(source.precision(), target.conductor() + max_generator(source) + 6);
}

}  // namespace

TruncatedSeries random_hom(const ModuleDescriptor& source, const ModuleDescriptor& target, const Field& f,
                           std::mt19937_64& rng) {
    TruncatedSeries out = TruncatedSeries::zero(f, source.precision());
    if (source.kind() == ModuleKind::IdealPower) {
        for (int a : hom_monomial_basis(source, target)) out.set_coefficient(a, field::random_scalar(f, rng));
        return out;
    }
    const auto basis = hom_monomial_basis(source, target, sample_window(source, target));
    if (basis.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> terms(0, 3);
    for (int t = terms(rng); t > 0; --t) {
        const int a = basis[pick(rng)];
        out.set_coefficient(a, out.coefficient(a) + field::random_nonzero_scalar(f, rng));
    }
    return out;
}

TruncatedSeries random_local_unit(const ModuleDescriptor& m, const Field& f, std::mt19937_64& rng) {
    TruncatedSeries u = random_hom(m, m, f, rng);
    u.set_coefficient(0, field::random_nonzero_scalar(f, rng));
    return u;
}

EndoMatrix random_endomorphism(const ModuleList& summands, const Field& f, std::mt19937_64& rng) {
    std::vector<TruncatedSeries> e;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j) e.push_back(random_hom(summands[j], summands[i], f, rng));
    return EndoMatrix(summands, std::move(e));
}

EndoMatrix random_unit(const ModuleList& summands, const Field& f, std::mt19937_64& rng) {
    const std::size_t s = summands.size();
    std::vector<TruncatedSeries> lower, upper, diag;
    for (std::size_t i = 0; i < s; ++i) {
        diag.push_back(random_local_unit(summands[i], f, rng));
        for (std::size_t j = 0; j < s; ++j) {
            const auto one = TruncatedSeries::one(f, summands[j].precision());
            const auto zero = TruncatedSeries::zero(f, summands[j].precision());
            lower.push_back(i > j ? random_hom(summands[j], summands[i], f, rng) : (i == j ? one : zero));
            upper.push_back(i < j ? random_hom(summands[j], summands[i], f, rng) : (i == j ? one : zero));
        }
    }
    return EndoMatrix(summands, std::move(lower)) * EndoMatrix::diagonal(summands, diag) *
           EndoMatrix(summands, std::move(upper));
}

EndoMatrix random_radical(const ModuleList& summands, const Field& f, std::mt19937_64& rng) {
    EndoMatrix a = random_endomorphism(summands, f, rng);
    for (std::size_t i = 0; i < summands.size(); ++i) {
        for (std::size_t j = 0; j < summands.size(); ++j) {
            if (!(summands[i] == summands[j])) continue;
            TruncatedSeries d = a.entry(i, j);
            d.set_coefficient(0, Scalar(f, 0));
            a = a.with_entry(i, j, d);
        }
    }
    return a;
}

}  // namespace ccmk::endoalg
