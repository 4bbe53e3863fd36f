#include "etaq/exact_arith.hpp"

#include <cctype>
#include <mutex>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq
{

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("make_rational: zero denominator");
    Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("malformed rational: '" + s + "'");
    Integer n(num.front() == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0)
        throw ParseError("zero denominator: '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

namespace
{

struct BernoulliTable
{
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

} // namespace

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational bernoulli(unsigned m)
{
    auto& table = bernoulli_table();
    std::lock_guard lock(table.mutex);
    auto& b = table.values;
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
    for (auto n = static_cast<unsigned>(b.size()); n <= m; ++n) {
        Rational acc(0);
        for (unsigned j = 0; j < n; ++j)
            if (b[j] != 0)
                acc += Rational(binomial(n + 1, j)) * b[j];
        Rational next = -acc / Rational(n + 1);
        next.canonicalize();
        b.push_back(std::move(next));
    }
    return b[m];
}

Integer sigma(unsigned power, std::int64_t n)
{
    if (n <= 0)
        return 0;
    Integer total = 0;
    auto add_power = [&](std::int64_t d) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), power);
        total += p;
    };
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        add_power(d);
        if (d * d != n)
            add_power(n / d);
    }
    return total;
}

Integer sigma(unsigned power, const Rational& n)
{
    Rational x = n;
    x.canonicalize();
    if (!is_integer(x) || x <= 0 || !x.get_num().fits_slong_p())
        return 0;
    return sigma(power, static_cast<std::int64_t>(x.get_num().get_si()));
}

int kronecker12(std::int64_t n)
{
    switch (((n % 12) + 12) % 12) {
    case 1:
    case 11:
        return 1;
    case 5:
    case 7:
        return -1;
    default:
        return 0;
    }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DomainError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& x)
{
    if (x.size() != m.cols())
        throw DomainError("matrix-vector dimension mismatch");
    RationalVector y(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && x[c] != 0)
                y[r] += m(r, c) * x[c];
    return y;
}

namespace
{

// Forward elimination to upper-triangular form, applied to an augmented right-hand
// side when given. Returns the determinant (0 when singular).
Rational eliminate(RationalMatrix& a, RationalVector* rhs)
{
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            if (rhs)
                std::swap((*rhs)[pivot], (*rhs)[col]);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0)
                continue;
            const Rational factor = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
            if (rhs)
                (*rhs)[r] -= factor * (*rhs)[col];
        }
    }
    return det;
}

} // namespace

RationalVector solve_linear_system(const RationalMatrix& m, const RationalVector& rhs)
{
    if (m.rows() != m.cols())
        throw DomainError("solve_linear_system: matrix is not square");
    if (rhs.size() != m.rows())
        throw DomainError("solve_linear_system: right-hand side has wrong length");
    RationalMatrix a = m;
    RationalVector b = rhs;
    if (eliminate(a, &b) == 0)
        throw SingularMatrix("solve_linear_system: matrix is singular");
    const std::size_t n = a.rows();
    RationalVector x(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c)
            acc -= a(r, c) * x[c];
        x[r] = acc / a(r, r);
    }
    return x;
}

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw DomainError("determinant: matrix is not square");
    RationalMatrix a = m;
    return eliminate(a, nullptr);
}

} // namespace etaq
