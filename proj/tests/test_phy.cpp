#include <doctest.h>

#include "maxant/phy.hpp"
#include "maxant/rng.hpp"

using namespace maxant;

namespace {

Eigen::VectorXcd random_symbols(RngStream& s, int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = s.cnormal();
    return v;
}

Eigen::MatrixXcd pass_through(const Codeword& cw, const ChannelMatrix& h) {
    return cw.symbols * h.transpose();
}

}  // namespace

TEST_CASE("scheme names round-trip") {
    CHECK(scheme_name(Scheme::Stbc) == "stbc");
    CHECK(scheme_name(Scheme::MaxSel) == "maxsel");
    CHECK(scheme_from_name("stbc") == Scheme::Stbc);
    CHECK(scheme_from_name("maxsel") == Scheme::MaxSel);
    CHECK_THROWS_AS(scheme_from_name("mrt"), InvalidInput);
}

TEST_CASE("bpsk mapping") {
    const Eigen::VectorXcd mod = bpsk_modulate({0, 1, 1, 0});
    CHECK(mod[0] == Complex(1, 0));
    CHECK(mod[1] == Complex(-1, 0));
    CHECK(mod[2] == Complex(-1, 0));
    CHECK(mod[3] == Complex(1, 0));

    SoftSymbols soft;
    soft.values.resize(4);
    soft.values << Complex(0.3, -2), Complex(-0.1, 5), Complex(0, 1),
        Complex(-1e-12, 0);
    CHECK(bpsk_demodulate(soft) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("bpsk round-trips through modulate/demodulate") {
    RngStream s(1, 0);
    std::vector<int> bits(64);
    for (auto& b : bits) b = s.uniform() < 0.5 ? 0 : 1;
    SoftSymbols soft;
    soft.values = bpsk_modulate(bits);
    soft.effective_gain = 1.0;
    CHECK(bpsk_demodulate(soft) == bits);
}

TEST_CASE("alamouti block layout and energy") {
    Eigen::VectorXcd s(2);
    s << Complex(1, 1), Complex(-1, 2);
    const Codeword cw = alamouti_encode(s);
    const double a = 1.0 / std::sqrt(2.0);
    CHECK(cw.n_time() == 2);
    CHECK(cw.n_tx() == 2);
    CHECK(cw.symbols_carried == 2);
    CHECK(std::abs(cw.symbols(0, 0) - a * s[0]) < 1e-15);
    CHECK(std::abs(cw.symbols(0, 1) - a * s[1]) < 1e-15);
    CHECK(std::abs(cw.symbols(1, 0) + a * std::conj(s[1])) < 1e-15);
    CHECK(std::abs(cw.symbols(1, 1) - a * std::conj(s[0])) < 1e-15);
    CHECK_THROWS_AS(alamouti_encode(Eigen::VectorXcd::Ones(3)), InvalidInput);
}

TEST_CASE("encoders radiate unit energy per information symbol") {
    RngStream s(2, 0);
    for (int i = 0; i < 100; ++i) {
        Eigen::VectorXcd sym2 = bpsk_modulate(
            {s.uniform() < 0.5, s.uniform() < 0.5});
        const Codeword al = alamouti_encode(sym2);
        CHECK(al.symbols.squaredNorm() ==
              doctest::Approx(al.symbols_carried).epsilon(1e-12));

        Eigen::VectorXcd sym4 = bpsk_modulate(
            {s.uniform() < 0.5, s.uniform() < 0.5, s.uniform() < 0.5,
             s.uniform() < 0.5});
        const Codeword os = ostbc4_encode(sym4);
        CHECK(os.symbols.squaredNorm() ==
              doctest::Approx(os.symbols_carried).epsilon(1e-12));
    }
}

TEST_CASE("encoders are complex-linear in the symbols") {
    RngStream s(3, 0);
    for (int i = 0; i < 50; ++i) {
        const Eigen::VectorXcd x = random_symbols(s, 4);
        const Eigen::VectorXcd y = random_symbols(s, 4);
        const double a = s.gauss();
        // real-linearity suffices for the conjugate-bearing rows
        Eigen::MatrixXcd lhs = ostbc4_encode(x + a * y).symbols;
        Eigen::MatrixXcd rhs =
            ostbc4_encode(x).symbols + a * ostbc4_encode(y).symbols;
        CHECK((lhs - rhs).norm() < 1e-12);

        lhs = alamouti_encode(x.head(2) + a * y.head(2)).symbols;
        rhs = alamouti_encode(x.head(2)).symbols +
              a * alamouti_encode(y.head(2)).symbols;
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("ostbc4 columns are orthogonal for random symbols") {
    RngStream s(4, 0);
    for (int i = 0; i < 200; ++i) {
        const Codeword cw = ostbc4_encode(random_symbols(s, 4));
        const Eigen::MatrixXcd gram = cw.symbols.adjoint() * cw.symbols;
        const double diag = gram(0, 0).real();
        CHECK((gram - diag * Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-10);
    }
}

TEST_CASE("stbc decode recovers symbols exactly without noise") {
    RngStream s(5, 0);
    for (int i = 0; i < 1000; ++i) {
        const int nt = i % 2 == 0 ? 2 : 4;
        const int nr = 1 + static_cast<int>(s.next_u64() % 4);
        const ChannelMatrix h = sample_rayleigh(nr, nt, s);
        const Eigen::VectorXcd sym = random_symbols(s, nt);
        const Codeword cw = nt == 2 ? alamouti_encode(sym.head(2))
                                    : ostbc4_encode(sym);
        const SoftSymbols soft = stbc_decode(pass_through(cw, h), h);
        CHECK((soft.values - sym.head(nt)).norm() < 1e-10);
    }
}

TEST_CASE("stbc effective gain matches the Frobenius norm formulae") {
    RngStream s(6, 0);
    for (int i = 0; i < 200; ++i) {
        const ChannelMatrix h2 = sample_rayleigh(3, 2, s);
        CHECK(stbc_decode(pass_through(alamouti_encode(random_symbols(s, 2)),
                                       h2),
                          h2)
                  .effective_gain ==
              doctest::Approx(h2.squaredNorm() / 2.0).epsilon(1e-10));

        const ChannelMatrix h4 = sample_rayleigh(2, 4, s);
        CHECK(stbc_decode(pass_through(ostbc4_encode(random_symbols(s, 4)),
                                       h4),
                          h4)
                  .effective_gain ==
              doctest::Approx(h4.squaredNorm() / 4.0).epsilon(1e-10));
    }
}

TEST_CASE("stbc decode statistic is matched-filter linear in the input") {
    // phi^T is linear, so decoding a sum equals the sum of decodings
    RngStream s(7, 0);
    const ChannelMatrix h = sample_rayleigh(2, 2, s);
    const StbcCombiner comb(h);
    const Eigen::MatrixXcd y1 = pass_through(
        alamouti_encode(random_symbols(s, 2)), h);
    Eigen::MatrixXcd y2(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) y2(r, c) = s.cnormal();
    const Eigen::VectorXcd sum = comb.decode(y1 + y2).values;
    const Eigen::VectorXcd parts =
        comb.decode(y1).values + comb.decode(y2).values;
    CHECK((sum - parts).norm() < 1e-10);
}

TEST_CASE("stbc decode input validation") {
    RngStream s(8, 0);
    const ChannelMatrix h = sample_rayleigh(2, 2, s);
    CHECK_THROWS_AS(stbc_decode(Eigen::MatrixXcd::Zero(3, 2), h),
                    InvalidInput);
    CHECK_THROWS_AS(stbc_decode(Eigen::MatrixXcd::Zero(2, 3), h),
                    InvalidInput);
    CHECK_THROWS_AS(stbc_decode(Eigen::MatrixXcd::Zero(3, 3),
                                sample_rayleigh(3, 3, s)),
                    InvalidInput);
}

TEST_CASE("selection_transmit puts all energy on one antenna") {
    const Eigen::VectorXcd sym = bpsk_modulate({0, 1, 0});
    const Codeword cw = selection_transmit(sym, 2, 4);
    CHECK(cw.n_time() == 3);
    CHECK(cw.n_tx() == 4);
    CHECK(cw.symbols_carried == 3);
    CHECK(cw.symbols.col(2) == sym);
    CHECK(cw.symbols.col(0).isZero());
    CHECK(cw.symbols.col(1).isZero());
    CHECK(cw.symbols.col(3).isZero());
    CHECK(cw.symbols.squaredNorm() == doctest::Approx(3.0));
    CHECK_THROWS_AS(selection_transmit(sym, 4, 4), InvalidInput);
    CHECK_THROWS_AS(selection_transmit(sym, -1, 4), InvalidInput);
}

TEST_CASE("mrc_combine statistic and gain") {
    Eigen::VectorXcd h(2);
    h << Complex(1, 1), Complex(0, -2);
    Eigen::MatrixXcd y(1, 2);
    y << Complex(2, 0), Complex(0, 1);
    const SoftSymbols soft = mrc_combine(y, h);
    // conj(h) = [1-i, 2i]; y . conj(h) = 2*(1-i) + i*2i = 2-2i-2 = -2i
    CHECK(soft.values[0].real() == doctest::Approx(0.0));
    CHECK(soft.values[0].imag() == doctest::Approx(-2.0));
    CHECK(soft.effective_gain == doctest::Approx(6.0));
    CHECK_THROWS_AS(mrc_combine(Eigen::MatrixXcd::Zero(1, 3), h),
                    InvalidInput);
}

TEST_CASE("mrc_combine is noise-free exact up to the gain") {
    RngStream s(9, 0);
    for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXcd h = random_symbols(s, 4);
        const Eigen::VectorXcd sym = random_symbols(s, 8);
        const Eigen::MatrixXcd y = sym * h.transpose();
        const SoftSymbols soft = mrc_combine(y, h);
        CHECK((soft.values / soft.effective_gain - sym).norm() < 1e-10);
    }
}

TEST_CASE("zf_receive nulls cross-stream interference") {
    RngStream s(10, 0);
    for (int i = 0; i < 100; ++i) {
        const int k = 2 + static_cast<int>(s.next_u64() % 3);
        const Eigen::MatrixXcd h = sample_rayleigh(4, k, s);
        Eigen::MatrixXcd x(6, k);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < k; ++c) x(r, c) = s.cnormal();
        const std::vector<SoftSymbols> out = zf_receive(x * h.transpose(), h);
        REQUIRE(static_cast<int>(out.size()) == k);
        for (int c = 0; c < k; ++c) {
            CHECK((out[static_cast<std::size_t>(c)].values - x.col(c)).norm() <
                  1e-8);
            CHECK(out[static_cast<std::size_t>(c)].effective_gain > 0.0);
        }
    }
}

TEST_CASE("zf_receive gain reduces to MRC gain for a single stream") {
    RngStream s(11, 0);
    const Eigen::MatrixXcd h = sample_rayleigh(4, 1, s);
    Eigen::MatrixXcd y(3, 4);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) y(r, c) = s.cnormal();
    const std::vector<SoftSymbols> out = zf_receive(y, h);
    CHECK(out[0].effective_gain ==
          doctest::Approx(h.col(0).squaredNorm()).epsilon(1e-12));
}

TEST_CASE("zf_receive rejects overloaded and singular channels") {
    CHECK_THROWS_AS(zf_receive(Eigen::MatrixXcd::Zero(1, 2),
                               Eigen::MatrixXcd::Ones(2, 3)),
                    InvalidInput);
    Eigen::MatrixXcd repeated(3, 2);
    repeated.col(0).setConstant(Complex(1, 2));
    repeated.col(1).setConstant(Complex(1, 2));
    CHECK_THROWS_AS(zf_receive(Eigen::MatrixXcd::Zero(1, 3), repeated),
                    SingularChannel);
}
