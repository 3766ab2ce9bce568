#include "qmob/exactmath.hpp"

#include <algorithm>
#include <cstddef>

namespace qmob {

FieldSpec FieldSpec::prime(const Int& p) {
    if (p < 2)
        throw DomainError("field characteristic must be a prime >= 2, got " + p.get_str());
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw DomainError("field characteristic must be prime, got " + p.get_str());
    return FieldSpec(true, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(false, Int(0)); }

const Int& FieldSpec::p() const {
    if (!prime_)
        throw DomainError("infinite field has no characteristic p");
    return p_;
}

std::string FieldSpec::to_string() const {
    return prime_ ? p_.get_str() : std::string("infinite");
}

namespace {

Int mod_nonneg(const Int& a, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

} // namespace

Rat FieldSpec::normalize(const Rat& x) const {
    if (!prime_) {
        // mpq arithmetic yields canonical results but the (num, den)
        // constructor does not; force lowest terms with positive denominator.
        Rat y = x;
        y.canonicalize();
        return y;
    }
    Int num = mod_nonneg(Int(x.get_num()), p_);
    Int den = mod_nonneg(Int(x.get_den()), p_);
    if (den == 0)
        throw DomainError("denominator divisible by field characteristic " + p_.get_str());
    if (den == 1)
        return Rat(num);
    Int deninv;
    mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
    return Rat(mod_nonneg(num * deninv, p_));
}

Rat FieldSpec::add(const Rat& a, const Rat& b) const {
    if (prime_)
        return Rat(mod_nonneg(Int(a.get_num()) + Int(b.get_num()), p_));
    return a + b;
}

Rat FieldSpec::sub(const Rat& a, const Rat& b) const {
    if (prime_)
        return Rat(mod_nonneg(Int(a.get_num()) - Int(b.get_num()), p_));
    return a - b;
}

Rat FieldSpec::mul(const Rat& a, const Rat& b) const {
    if (prime_)
        return Rat(mod_nonneg(Int(a.get_num()) * Int(b.get_num()), p_));
    return a * b;
}

Rat FieldSpec::neg(const Rat& a) const {
    if (prime_)
        return Rat(mod_nonneg(-Int(a.get_num()), p_));
    return -a;
}

Rat FieldSpec::inv(const Rat& a) const {
    if (a == 0)
        throw DomainError("division by zero");
    if (prime_) {
        Int r;
        mpz_invert(r.get_mpz_t(), Int(a.get_num()).get_mpz_t(), p_.get_mpz_t());
        return Rat(r);
    }
    return Rat(1) / a;
}

Rat FieldSpec::div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

std::string scalar_to_string(const Rat& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Mat::Mat(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0)
        throw DomainError("matrix dimensions must be nonnegative");
}

Mat::Mat(const FieldSpec& f, int rows, int cols, std::vector<Rat> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0)
        throw DomainError("matrix dimensions must be nonnegative");
    if (e_.size() != std::size_t(rows) * cols)
        throw DomainError("matrix entry count does not match shape");
    for (auto& x : e_)
        x = field_.normalize(x);
}

Mat Mat::identity(const FieldSpec& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
        m.e_[std::size_t(i) * n + i] = f.normalize(Rat(1));
    return m;
}

Mat Mat::from_rows(const FieldSpec& f, int cols,
                   const std::vector<std::vector<Rat>>& rows) {
    Mat m(f, int(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols)
            throw DomainError("row length does not match column count");
        for (int j = 0; j < cols; ++j)
            m.e_[i * cols + j] = f.normalize(rows[i][std::size_t(j)]);
    }
    return m;
}

Mat Mat::mul(const Mat& rhs) const {
    if (field_ != rhs.field_)
        throw Incompatible("matrix product over different fields");
    if (cols_ != rhs.rows_)
        throw Incompatible("matrix product shape mismatch: " + std::to_string(cols_) +
                           " vs " + std::to_string(rhs.rows_));
    Mat out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rat& b = rhs.at(k, j);
                if (b == 0)
                    continue;
                out.e_[std::size_t(i) * rhs.cols_ + j] =
                    field_.add(out.at(i, j), field_.mul(a, b));
            }
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.e_[std::size_t(j) * rows_ + i] = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0)
            return false;
    return true;
}

std::vector<Rat> Mat::row(int i) const {
    std::vector<Rat> r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
        r[std::size_t(j)] = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::pair<Mat, int> rref(const Mat& m) {
    Mat r = m;
    const FieldSpec& f = r.field();
    int rank = 0;
    for (int col = 0; col < r.cols() && rank < r.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int j = 0; j < r.cols(); ++j) {
                Rat tmp = r.at(rank, j);
                r.set(rank, j, r.at(piv, j));
                r.set(piv, j, tmp);
            }
        Rat lead_inv = f.inv(r.at(rank, col));
        for (int j = col; j < r.cols(); ++j)
            r.set(rank, j, f.mul(r.at(rank, j), lead_inv));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == rank)
                continue;
            Rat c = r.at(i, col);
            if (c == 0)
                continue;
            for (int j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(rank, j))));
        }
        ++rank;
    }
    return {r, rank};
}

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
    pivots_.reserve(std::size_t(basis_.rows()));
    for (int i = 0; i < basis_.rows(); ++i) {
        int j = 0;
        while (j < basis_.cols() && basis_.at(i, j) == 0)
            ++j;
        pivots_.push_back(j);
    }
}

Subspace Subspace::zero(const FieldSpec& f, int ambient) {
    return Subspace(Mat(f, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& f, int ambient) {
    return Subspace(Mat::identity(f, ambient));
}

Subspace Subspace::span(const FieldSpec& f, int ambient,
                        const std::vector<std::vector<Rat>>& vectors) {
    return span(Mat::from_rows(f, ambient, vectors));
}

Subspace Subspace::span(const Mat& rows_as_vectors) {
    auto [r, rank] = rref(rows_as_vectors);
    Mat basis(r.field(), rank, r.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < r.cols(); ++j)
            basis.set(i, j, r.at(i, j));
    return Subspace(std::move(basis));
}

bool Subspace::contains(const std::vector<Rat>& vec) const {
    if (int(vec.size()) != ambient())
        throw AmbientMismatch("vector length " + std::to_string(vec.size()) +
                              " does not match ambient dimension " +
                              std::to_string(ambient()));
    const FieldSpec& f = field();
    std::vector<Rat> v(vec.size());
    for (std::size_t j = 0; j < vec.size(); ++j)
        v[j] = f.normalize(vec[j]);
    // Reduce against the RREF basis; membership iff the residue vanishes.
    for (int i = 0; i < dim(); ++i) {
        Rat c = v[std::size_t(pivots_[std::size_t(i)])]; // copy: the loop below clears this slot
        if (c == 0)
            continue;
        for (int j = pivots_[std::size_t(i)]; j < ambient(); ++j)
            v[std::size_t(j)] = f.sub(v[std::size_t(j)], f.mul(c, basis_.at(i, j)));
    }
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

int cmp(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw AmbientMismatch("comparing subspaces of different ambient spaces");
    if (a.dim() != b.dim())
        return a.dim() < b.dim() ? -1 : 1;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.ambient(); ++j) {
            int c = ::cmp(a.basis().at(i, j), b.basis().at(i, j));
            if (c != 0)
                return c;
        }
    return 0;
}

Subspace kernel(const Mat& m) {
    auto [r, rank] = rref(m);
    std::vector<int> piv_of_col(std::size_t(m.cols()), -1);
    {
        int col = 0;
        for (int i = 0; i < rank; ++i) {
            while (col < m.cols() && r.at(i, col) == 0)
                ++col;
            piv_of_col[std::size_t(col)] = i;
        }
    }
    const FieldSpec& f = m.field();
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (piv_of_col[std::size_t(free)] >= 0)
            continue;
        std::vector<Rat> v(std::size_t(m.cols()), Rat(0));
        v[std::size_t(free)] = f.normalize(Rat(1));
        for (int j = 0; j < m.cols(); ++j) {
            int i = piv_of_col[std::size_t(j)];
            if (i >= 0)
                v[std::size_t(j)] = f.neg(r.at(i, free));
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Mat& m) { return Subspace::span(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw AmbientMismatch("sum of subspaces of different ambient spaces");
    std::vector<std::vector<Rat>> rows;
    rows.reserve(std::size_t(a.dim() + b.dim()));
    for (int i = 0; i < a.dim(); ++i)
        rows.push_back(a.basis().row(i));
    for (int i = 0; i < b.dim(); ++i)
        rows.push_back(b.basis().row(i));
    return Subspace::span(a.field(), a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw AmbientMismatch("intersection of subspaces of different ambient spaces");
    // x is orthogonal to every annihilator row of a and of b exactly when it
    // lies in both row spaces; double annihilation is the identity here.
    Subspace ann_a = kernel(a.basis());
    Subspace ann_b = kernel(b.basis());
    std::vector<std::vector<Rat>> rows;
    rows.reserve(std::size_t(ann_a.dim() + ann_b.dim()));
    for (int i = 0; i < ann_a.dim(); ++i)
        rows.push_back(ann_a.basis().row(i));
    for (int i = 0; i < ann_b.dim(); ++i)
        rows.push_back(ann_b.basis().row(i));
    return kernel(Mat::from_rows(a.field(), a.ambient(), rows));
}

Subspace apply(const Mat& m, const Subspace& v) {
    if (m.cols() != v.ambient())
        throw AmbientMismatch("matrix expects ambient dimension " +
                              std::to_string(m.cols()) + ", subspace has " +
                              std::to_string(v.ambient()));
    if (m.field() != v.field())
        throw AmbientMismatch("matrix and subspace over different fields");
    return Subspace::span(v.basis().mul(m.transpose()));
}

bool leq(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.field() != b.field())
        throw AmbientMismatch("containment of subspaces of different ambient spaces");
    if (a.dim() > b.dim())
        return false;
    for (int i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis().row(i)))
            return false;
    return true;
}

Int s_number(int j, const Int& q) {
    if (j < 0)
        throw DomainError("s-number index must be nonnegative");
    if (q < 1)
        throw DomainError("s-number base must be >= 1");
    Int acc = 0;
    Int pw = 1;
    for (int i = 0; i < j; ++i) {
        acc += pw;
        pw *= q;
    }
    return acc;
}

Int gaussian_binomial(int t, int l, const Int& q) {
    if (l < 0 || l > t)
        throw DomainError("gaussian binomial requires 0 <= l <= t");
    if (q < 1)
        throw DomainError("gaussian binomial base must be >= 1");
    Int num = 1, den = 1;
    for (int i = 0; i < l; ++i) {
        num *= s_number(t - i, q);
        den *= s_number(i + 1, q);
    }
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw DomainError("gaussian binomial product was not integral (internal)");
    return quot;
}

Int subspace_count(int n, const Int& q) {
    Int total = 0;
    for (int l = 0; l <= n; ++l)
        total += gaussian_binomial(n, l, q);
    return total;
}

std::vector<std::vector<int>> pivot_patterns(int n, int l) {
    std::vector<std::vector<int>> out;
    if (l < 0 || l > n)
        return out;
    std::vector<int> c(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        c[std::size_t(i)] = i;
    while (true) {
        out.push_back(c);
        int i = l - 1;
        while (i >= 0 && c[std::size_t(i)] == n - l + i)
            --i;
        if (i < 0)
            break;
        ++c[std::size_t(i)];
        for (int j = i + 1; j < l; ++j)
            c[std::size_t(j)] = c[std::size_t(j - 1)] + 1;
    }
    return out;
}

std::vector<Subspace> subspaces_with_pivots(const FieldSpec& f, int n,
                                            const std::vector<int>& pivots) {
    if (!f.is_prime())
        throw DomainError("subspace enumeration needs a finite field");
    const int l = int(pivots.size());
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int p : pivots) {
        if (p < 0 || p >= n)
            throw DomainError("pivot column out of range");
        is_pivot[std::size_t(p)] = true;
    }
    // Free positions: to the right of each row's pivot, skipping later pivots.
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < l; ++i)
        for (int j = pivots[std::size_t(i)] + 1; j < n; ++j)
            if (!is_pivot[std::size_t(j)])
                free_pos.emplace_back(i, j);
    const unsigned long p_ul = f.p().get_ui();
    std::vector<unsigned long> digits(free_pos.size(), 0);
    std::vector<Subspace> out;
    while (true) {
        Mat m(f, l, n);
        for (int i = 0; i < l; ++i)
            m.set(i, pivots[std::size_t(i)], Rat(1));
        for (std::size_t k = 0; k < free_pos.size(); ++k)
            m.set(free_pos[k].first, free_pos[k].second, Rat(long(digits[k])));
        out.push_back(Subspace::span(m));
        bool rolled_over = true;
        for (std::size_t k = free_pos.size(); k-- > 0;) {
            if (++digits[k] < p_ul) {
                rolled_over = false;
                break;
            }
            digits[k] = 0;
        }
        if (rolled_over)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return cmp(a, b) < 0; });
    return out;
}

SubspaceStream::SubspaceStream(const FieldSpec& f, int n)
    : field_(f), n_(n), dim_(-1), pos_(0) {
    if (!f.is_prime())
        throw DomainError("subspace enumeration needs a finite field");
    if (n < 0)
        throw DomainError("ambient dimension must be nonnegative");
}

void SubspaceStream::fill_buffer() {
    buffer_.clear();
    pos_ = 0;
    if (dim_ > n_)
        return;
    for (const auto& piv : pivot_patterns(n_, dim_)) {
        auto batch = subspaces_with_pivots(field_, n_, piv);
        buffer_.insert(buffer_.end(), batch.begin(), batch.end());
    }
    std::sort(buffer_.begin(), buffer_.end(),
              [](const Subspace& a, const Subspace& b) { return cmp(a, b) < 0; });
}

bool SubspaceStream::next(Subspace& out) {
    while (pos_ >= buffer_.size()) {
        if (dim_ >= n_)
            return false;
        ++dim_;
        fill_buffer();
    }
    out = buffer_[pos_++];
    return true;
}

std::vector<Subspace> all_subspaces(const FieldSpec& f, int n, std::uint64_t cap) {
    SubspaceStream stream(f, n);
    std::vector<Subspace> out;
    Subspace s = Subspace::zero(f, n);
    while (stream.next(s)) {
        if (out.size() >= cap)
            throw CapExceeded(cap, "subspace enumeration of dimension " +
                                       std::to_string(n) + " over F_" + f.p().get_str() +
                                       " exceeds cap " + std::to_string(cap));
        out.push_back(s);
    }
    return out;
}

} // namespace qmob
