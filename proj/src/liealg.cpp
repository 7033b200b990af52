#include "sln/liealg.hpp"

#include "sln/linalg.hpp"

#include <json.hpp>

namespace sln {

namespace {

RadicalScalar two_i() { return RadicalScalar::gaussian(Rational(0), Rational(2)); }
RadicalScalar half() { return RadicalScalar(Rational(1, 2)); }

std::string idx(int s, int t) {
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

SuperMatrix scaled_unit(const BlockShape& sh, int s, int t, const RadicalScalar& c) {
    SuperMatrix m = SuperMatrix::unit(sh, s, t);
    m.at(s, t) = c;
    return m;
}

/// Reset the declared parity to the entry support (zero stays Even).
SuperMatrix retag(SuperMatrix m) {
    m.set_parity(m.support_parity());
    return m;
}

DoubleElement retag(DoubleElement x) {
    return {retag(std::move(x.first)), retag(std::move(x.second))};
}

} // namespace

SlBasis::SlBasis(BlockShape shape) : shape_(shape) {
    const int m = shape.m, n = shape.n;
    auto push = [&](std::string label, Family fam, SuperMatrix v, SuperMatrix dual) {
        Parity p = v.support_parity();
        v.set_parity(p);
        dual.set_parity(p);
        vectors_.push_back({std::move(label), fam, p, std::move(v), std::move(dual)});
    };

    // even roots of the upper block: E_st, dual 2i E_ts
    for (int s = 1; s <= m; ++s)
        for (int t = s + 1; t <= m; ++t)
            push("E" + idx(s, t), Family::PositiveRoot, SuperMatrix::unit(shape, s, t),
                 scaled_unit(shape, t, s, two_i()));
    for (int s = 1; s <= m; ++s)
        for (int t = s + 1; t <= m; ++t)
            push("E" + idx(t, s), Family::NegativeRoot, SuperMatrix::unit(shape, t, s),
                 scaled_unit(shape, s, t, two_i()));
    // Cartan of the upper block: H_k = (E_11+...+E_kk - k E_{k+1,k+1})/sqrt(k(k+1))
    for (int k = 1; k <= m - 1; ++k) {
        RadicalScalar c = RadicalScalar::inv_sqrt(static_cast<long>(k) * (k + 1));
        SuperMatrix h = SuperMatrix::zero(shape);
        for (int l = 1; l <= k; ++l) h.at(l, l) = c;
        h.at(k + 1, k + 1) = -(RadicalScalar(k) * c);
        push("H(" + std::to_string(k) + ")", Family::Cartan, h, two_i() * h);
    }
    // even roots of the lower block: i E_st, dual 2i (i E_ts)
    for (int s = m + 1; s <= m + n; ++s)
        for (int t = s + 1; t <= m + n; ++t)
            push("Et" + idx(s, t), Family::PositiveRoot,
                 scaled_unit(shape, s, t, RadicalScalar::i()),
                 scaled_unit(shape, t, s, two_i() * RadicalScalar::i()));
    for (int s = m + 1; s <= m + n; ++s)
        for (int t = s + 1; t <= m + n; ++t)
            push("Et" + idx(t, s), Family::NegativeRoot,
                 scaled_unit(shape, t, s, RadicalScalar::i()),
                 scaled_unit(shape, s, t, two_i() * RadicalScalar::i()));
    // Cartan of the lower block, indexed inside its own block so that
    // Str(Ht_k Ht_k) = 1:  Ht_k = i (E_{m+1,m+1}+...+E_{m+k,m+k}
    //                              - k E_{m+k+1,m+k+1}) / sqrt(k(k+1))
    for (int k = 1; k <= n - 1; ++k) {
        RadicalScalar c =
            RadicalScalar::i() * RadicalScalar::inv_sqrt(static_cast<long>(k) * (k + 1));
        SuperMatrix h = SuperMatrix::zero(shape);
        for (int l = 1; l <= k; ++l) h.at(m + l, m + l) = c;
        h.at(m + k + 1, m + k + 1) = -(RadicalScalar(k) * c);
        push("Ht(" + std::to_string(k) + ")", Family::Cartan, h, two_i() * h);
    }
    // odd roots: V = E_st with s <= m < t; duals 2i V_{-gamma} and -2i V_gamma
    for (int s = 1; s <= m; ++s)
        for (int t = m + 1; t <= m + n; ++t)
            push("V" + idx(s, t), Family::PositiveRoot, SuperMatrix::unit(shape, s, t),
                 scaled_unit(shape, t, s, two_i()));
    for (int s = 1; s <= m; ++s)
        for (int t = m + 1; t <= m + n; ++t)
            push("V" + idx(t, s), Family::NegativeRoot, SuperMatrix::unit(shape, t, s),
                 scaled_unit(shape, s, t, -two_i()));
    // the supertraceless identity-like Cartan:
    // H_0 = a (sum_{k<=m} E_kk + (m/n) sum_{k>m} E_kk), a^2 = n/(m(n-m))
    {
        long mm = m, nn = n;
        RadicalScalar a;
        if (n > m)
            a = RadicalScalar::radical(Gaussian{Rational(1, mm * (nn - mm)), Rational()},
                                       nn * mm * (nn - mm));
        else
            a = RadicalScalar::i() *
                RadicalScalar::radical(Gaussian{Rational(1, mm * (mm - nn)), Rational()},
                                       nn * mm * (mm - nn));
        SuperMatrix h = SuperMatrix::zero(shape);
        for (int k = 1; k <= m; ++k) h.at(k, k) = a;
        for (int k = m + 1; k <= m + n; ++k)
            h.at(k, k) = RadicalScalar(Rational(mm, nn)) * a;
        push("H0", Family::Cartan, h, two_i() * h);
    }

    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            RadicalScalar want = (i == j) ? RadicalScalar(1) : RadicalScalar();
            if (sp_sl(vectors_[i].matrix, vectors_[j].dual) != want)
                throw DualityValidationFailed(i, j);
        }
}

SlBasis build_sl_basis(BlockShape shape) { return SlBasis(shape); }

DoubleBasis::DoubleBasis(BlockShape shape) : sl_(shape) {
    for (int i = 0; i < sl_.dim(); ++i) {
        const BasisVector& v = sl_[i];
        SuperMatrix zero = SuperMatrix::zero(shape, v.parity);
        DoubleElement T(v.matrix, v.matrix);
        DoubleElement t;
        switch (v.family) {
        case Family::PositiveRoot: t = DoubleElement(v.dual, zero); break;
        case Family::NegativeRoot: t = DoubleElement(zero, -v.dual); break;
        case Family::Cartan:
            t = DoubleElement(half() * v.dual, -(half() * v.dual));
            break;
        }
        vectors_.push_back({v.label, v.family, parity_value(v.parity), std::move(T),
                            std::move(t)});
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            RadicalScalar want = (i == j) ? RadicalScalar(1) : RadicalScalar();
            if (sp_double(vectors_[i].T, vectors_[j].t) != want)
                throw DualityValidationFailed(i, j);
        }
}

DoubleBasis build_double_basis(BlockShape shape) { return DoubleBasis(shape); }

std::vector<RadicalScalar> DoubleBasis::g_coefficients(const DoubleElement& x) const {
    std::vector<RadicalScalar> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) out.push_back(sp_double(x, v.t));
    return out;
}

std::vector<RadicalScalar> DoubleBasis::b_coefficients(const DoubleElement& x) const {
    std::vector<RadicalScalar> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) {
        RadicalScalar c = sp_double(x, v.T);
        out.push_back(v.parity ? -c : c);
    }
    return out;
}

SuperMatrix strict_upper(const SuperMatrix& m) {
    SuperMatrix r = SuperMatrix::zero(m.shape());
    for (int i = 1; i <= m.shape().dim(); ++i)
        for (int j = i + 1; j <= m.shape().dim(); ++j) r.at(i, j) = m.at(i, j);
    return retag(std::move(r));
}

SuperMatrix strict_lower(const SuperMatrix& m) {
    SuperMatrix r = SuperMatrix::zero(m.shape());
    for (int i = 1; i <= m.shape().dim(); ++i)
        for (int j = 1; j < i; ++j) r.at(i, j) = m.at(i, j);
    return retag(std::move(r));
}

SuperMatrix diagonal_part(const SuperMatrix& m) {
    SuperMatrix r = SuperMatrix::zero(m.shape());
    for (int i = 1; i <= m.shape().dim(); ++i) r.at(i, i) = m.at(i, i);
    return r;
}

std::pair<DoubleElement, DoubleElement> decompose(const DoubleElement& x) {
    if (!x.in_double()) throw NotInDouble();
    SuperMatrix c = strict_upper(x.first) + strict_lower(x.second) +
                    half() * (diagonal_part(x.first) + diagonal_part(x.second));
    c = retag(std::move(c));
    DoubleElement g_part(c, c);
    DoubleElement b_part = retag(DoubleElement(x.first - c, x.second - c));
    return {std::move(g_part), std::move(b_part)};
}

DoubleElement r_operator(const DoubleElement& x) {
    auto [g_part, b_part] = decompose(x);
    return retag(b_part - g_part);
}

SuperMatrix phi_sl(const SuperMatrix& m) {
    int p = parity_value(m.parity());
    SuperMatrix st = supertranspose(m.conj());
    SuperMatrix r = p ? st : -st; // -(-1)^{|m|}
    r.set_parity(m.parity());
    return r;
}

DoubleElement phi_double(const DoubleElement& x) {
    int p = parity_value(x.parity());
    auto apply = [&](const SuperMatrix& m) {
        SuperMatrix st = supertranspose(m.conj());
        SuperMatrix r = p ? st : -st;
        r.set_parity(p ? Parity::Odd : Parity::Even);
        return r;
    };
    return {apply(x.second), apply(x.first)};
}

SuiteResult verify_baxter(const DoubleBasis& basis) {
    SuiteResult suite;
    suite.name = "baxter";
    SuiteTimer timer(suite);

    std::vector<const DoubleElement*> elems;
    std::vector<std::string> labels;
    for (const auto& v : basis.vectors()) {
        elems.push_back(&v.T);
        labels.push_back("T[" + v.label + "]");
    }
    for (const auto& v : basis.vectors()) {
        elems.push_back(&v.t);
        labels.push_back("t[" + v.label + "]");
    }

    std::vector<DoubleElement> r_of;
    r_of.reserve(elems.size());
    for (const auto* e : elems) r_of.push_back(r_operator(*e));

    for (size_t i = 0; i < elems.size(); ++i) {
        const DoubleElement& x = *elems[i];
        // phi R = R phi
        suite.check(phi_double(r_of[i]) == r_operator(phi_double(x)),
                    "phi/R commutation on " + labels[i]);
        for (size_t j = 0; j < elems.size(); ++j) {
            const DoubleElement& y = *elems[j];
            // [Rx,Ry] = R([Rx,y] + [x,Ry]) - [x,y]
            DoubleElement defect =
                superbracket(r_of[i], r_of[j]) -
                r_operator(retag(superbracket(r_of[i], y) + superbracket(x, r_of[j]))) +
                superbracket(x, y);
            suite.check(defect.is_zero(), [&] {
                return "Yang-Baxter defect on (" + labels[i] + ", " + labels[j] + ")";
            });
            // (Rx, y) = -(x, Ry)
            suite.check(sp_double(r_of[i], y) + sp_double(x, r_of[j]) == RadicalScalar(),
                        [&] {
                            return "R antisymmetry on (" + labels[i] + ", " + labels[j] + ")";
                        });
            // (phi x, phi y) = conj (x, y)
            suite.check(sp_double(phi_double(x), phi_double(y)) == sp_double(x, y).conj(),
                        [&] {
                            return "pairing/phi compatibility on (" + labels[i] + ", " +
                                   labels[j] + ")";
                        });
        }
    }
    return suite;
}

SuiteResult verify_manin(const DoubleBasis& basis) {
    SuiteResult suite;
    suite.name = "manin";
    SuiteTimer timer(suite);
    const int d = basis.dim();

    auto is_zero_vec = [](const std::vector<RadicalScalar>& v) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    auto combine_T = [&](const std::vector<RadicalScalar>& c) {
        DoubleElement acc(SuperMatrix::zero(basis.shape()), SuperMatrix::zero(basis.shape()));
        for (int k = 0; k < d; ++k) acc = acc + c[k] * basis[k].T;
        return acc;
    };
    auto combine_t = [&](const std::vector<RadicalScalar>& c) {
        DoubleElement acc(SuperMatrix::zero(basis.shape()), SuperMatrix::zero(basis.shape()));
        for (int k = 0; k < d; ++k) acc = acc + c[k] * basis[k].t;
        return acc;
    };

    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const auto& vi = basis[i];
            const auto& vj = basis[j];
            // isotropy and duality of the pairing
            suite.check(sp_double(vi.T, vj.T).is_zero(), [&] {
                return "g isotropy fails at (" + vi.label + ", " + vj.label + ")";
            });
            suite.check(sp_double(vi.t, vj.t).is_zero(), [&] {
                return "b isotropy fails at (" + vi.label + ", " + vj.label + ")";
            });
            RadicalScalar want = (i == j) ? RadicalScalar(1) : RadicalScalar();
            suite.check(sp_double(vi.T, vj.t) == want, [&] {
                return "duality fails at (" + vi.label + ", " + vj.label + ")";
            });
            // closure of g: the bracket has no component along b
            DoubleElement brT = superbracket(vi.T, vj.T);
            suite.check(is_zero_vec(basis.b_coefficients(brT)) &&
                            combine_T(basis.g_coefficients(brT)) == brT,
                        [&] {
                            return "g closure fails at [" + vi.label + ", " + vj.label + "]";
                        });
            // closure of b
            DoubleElement brt = superbracket(vi.t, vj.t);
            suite.check(is_zero_vec(basis.g_coefficients(brt)) &&
                            combine_t(basis.b_coefficients(brt)) == brt,
                        [&] {
                            return "b closure fails at [" + vi.label + ", " + vj.label + "]";
                        });
        }
        // roundtrip on a mixed element T_i + t_i
        DoubleElement x = retag(basis[i].T + basis[i].t);
        DoubleElement back =
            retag(combine_T(basis.g_coefficients(x)) + combine_t(basis.b_coefficients(x)));
        suite.check(back == x, "dual-basis roundtrip fails at index " + basis[i].label);
    }
    return suite;
}

SuiteResult verify_triangular(const SlBasis& basis) {
    SuiteResult suite;
    suite.name = "triangular";
    SuiteTimer timer(suite);

    auto in_piece = [](const SuperMatrix& x, Family f) {
        switch (f) {
        case Family::PositiveRoot: return x == strict_upper(x);
        case Family::NegativeRoot: return x == strict_lower(x);
        case Family::Cartan: return x == diagonal_part(x);
        }
        return false;
    };

    for (const auto& vi : basis.vectors()) {
        for (const auto& vj : basis.vectors()) {
            SuperMatrix br = superbracket(vi.matrix, vj.matrix);
            // each triangular piece is a sub-superalgebra
            if (vi.family == vj.family) {
                suite.check(in_piece(br, vi.family), [&] {
                    return "piece closure fails at [" + vi.label + ", " + vj.label + "]";
                });
            }
            // the Cartan part normalizes the root pieces
            if (vi.family == Family::Cartan && vj.family != Family::Cartan) {
                suite.check(in_piece(br, vj.family), [&] {
                    return "Cartan normalization fails at [" + vi.label + ", " + vj.label +
                           "]";
                });
            }
            // orthogonality: each root piece is orthogonal to itself and to
            // the Cartan piece
            bool expect_zero =
                (vi.family == vj.family && vi.family != Family::Cartan) ||
                (vi.family == Family::Cartan) != (vj.family == Family::Cartan);
            if (expect_zero) {
                suite.check(sp_sl(vi.matrix, vj.matrix).is_zero(), [&] {
                    return "orthogonality fails at (" + vi.label + ", " + vj.label + ")";
                });
            }
        }
    }
    return suite;
}

std::pair<int, int> phi_fixed_dimensions(BlockShape shape) {
    auto dim_for = [&](int parity) {
        // unknowns: re/im of the entries whose index parity sum equals `parity`
        std::vector<std::pair<int, int>> positions;
        for (int i = 1; i <= shape.dim(); ++i)
            for (int j = 1; j <= shape.dim(); ++j)
                if ((shape.index_parity(i) + shape.index_parity(j)) % 2 == parity)
                    positions.push_back({i, j});
        auto col_re = [&](size_t k) { return 2 * k; };
        auto col_im = [&](size_t k) { return 2 * k + 1; };
        auto pos_index = [&](int i, int j) {
            for (size_t k = 0; k < positions.size(); ++k)
                if (positions[k].first == i && positions[k].second == j) return k;
            throw std::logic_error("position lookup");
        };

        RationalMatrix rows;
        size_t cols = 2 * positions.size();
        // fixed-point equations: M_ij = s_ij conj(M_ji) with
        // s_ij = -(-1)^{|M|} (-1)^{|i|(|i|+|j|)}
        for (size_t k = 0; k < positions.size(); ++k) {
            auto [i, j] = positions[k];
            int exp = parity + shape.index_parity(i) *
                                   ((shape.index_parity(i) + shape.index_parity(j)) % 2);
            Rational s = (exp % 2) ? Rational(1) : Rational(-1);
            size_t kt = pos_index(j, i);
            std::vector<Rational> re_row(cols, Rational(0)), im_row(cols, Rational(0));
            re_row[col_re(k)] += Rational(1);
            re_row[col_re(kt)] -= s;
            im_row[col_im(k)] += Rational(1);
            im_row[col_im(kt)] += s;
            rows.push_back(std::move(re_row));
            rows.push_back(std::move(im_row));
        }
        // supertrace constraint (only meets even unknowns)
        if (parity == 0) {
            std::vector<Rational> re_row(cols, Rational(0)), im_row(cols, Rational(0));
            for (size_t k = 0; k < positions.size(); ++k) {
                auto [i, j] = positions[k];
                if (i != j) continue;
                Rational sgn = shape.index_parity(i) ? Rational(-1) : Rational(1);
                re_row[col_re(k)] += sgn;
                im_row[col_im(k)] += sgn;
            }
            rows.push_back(std::move(re_row));
            rows.push_back(std::move(im_row));
        }
        return static_cast<int>(cols) - rank(rows);
    };
    return {dim_for(0), dim_for(1)};
}

std::string structure_constants_json(const DoubleBasis& basis) {
    std::string out;
    const int d = basis.dim();
    auto emit = [&](const char* name, int i, int j, int k, const RadicalScalar& c) {
        nlohmann::ordered_json line;
        line["basis"] = name;
        line["i"] = i;
        line["j"] = j;
        line["k"] = k;
        line["value"] = c.str();
        out += line.dump() + "\n";
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto cT = basis.g_coefficients(superbracket(basis[i].T, basis[j].T));
            for (int k = 0; k < d; ++k)
                if (!cT[k].is_zero()) emit("T", i, j, k, cT[k]);
            auto ct = basis.b_coefficients(superbracket(basis[i].t, basis[j].t));
            for (int k = 0; k < d; ++k)
                if (!ct[k].is_zero()) emit("t", i, j, k, ct[k]);
        }
    return out;
}

} // namespace sln
