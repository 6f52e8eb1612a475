#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "cli.hpp"
#include "threefold/jordan.hpp"
#include "threefold/random.hpp"
#include "threefold/spectra.hpp"

namespace threefold::cli {

namespace {

std::string fixed6(double x) {
    if (std::abs(x) < 5e-7) x = 0.0;  // no "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

std::string signed_one(int s) { return s > 0 ? "+1" : "-1"; }

std::string spin_label(Spin j) {
    return j.is_half_integer() ? std::to_string(j.twice()) + "/2" : std::to_string(j.twice() / 2);
}

std::string kind_summary(RepKind kind, double fs, int j_sign) {
    std::string s = std::string(kind_name(kind)) + ", FS = " + fixed6(fs);
    if (j_sign != 0) s += ", J² = " + signed_one(j_sign);
    return s;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

Item classify_item(const FiniteGroupRep& rep, double tol) {
    Item item;
    item.label = rep.name;
    item.values["dim"] = rep.dim;
    const RepValidation v = validate(rep);
    item.values["unitarity_defect"] = v.max_unitarity_defect;
    item.values["homomorphism_defect"] = v.max_homomorphism_defect;
    if (!v.ok()) {
        item.summary = "invalid representation: " + v.problem;
        return item;
    }
    const double fs = fs_indicator_finite(rep);
    const std::size_t commutant = commutant_dimension(rep);
    item.values["fs_indicator"] = fs;
    item.values["commutant_dim"] = commutant;
    if (commutant != 1) {
        item.pass = true;
        item.values["kind"] = "reducible";
        item.summary = "reducible (commutant dimension " + std::to_string(commutant) + "), FS = " + fixed6(fs);
        return item;
    }
    try {
        const Classification c = classify(rep);
        item.values["kind"] = kind_name(c.kind);
        item.pass = true;
        if (c.j) {
            double commutation = 0.0;
            for (const auto& m : rep.matrices) commutation = std::max(commutation, c.j->commutator_norm(m));
            const double antiunitarity = c.j->antiunitarity_defect();
            const double square = distance(c.j->square(), CMatrix::scalar(rep.dim, Complex(c.j_square_sign)));
            const double losing = c.form->losing_class_norm();
            item.values["form_symmetry"] = symmetry_name(c.form->symmetry);
            item.values["j_square_sign"] = c.j_square_sign;
            item.values["commutation_defect"] = commutation;
            item.values["antiunitarity_defect"] = antiunitarity;
            item.values["j_square_defect"] = square;
            item.values["losing_class_norm"] = losing;
            item.pass = commutation < tol && antiunitarity < tol && square < tol && losing < tol;
        }
        item.summary = kind_summary(c.kind, c.fs_indicator, c.j_square_sign);
    } catch (const Error& e) {
        item.pass = false;
        item.summary = std::string("routes disagree: ") + e.what();
    }
    return item;
}

// ---------------------------------------------------------------------------
// jordan
// ---------------------------------------------------------------------------

struct MaxOf {
    double value = 0.0;
    void operator()(double x) { value = std::max(value, x); }
};

Item residual_item(std::string label, double residual, double tol) {
    Item item{std::move(label), residual < tol, "max residual " + sci(residual), {}};
    item.values["max_residual"] = residual;
    item.values["tolerance"] = tol;
    return item;
}

}  // namespace

Report cmd_classify(const GroupFile& file, const Options& opts) {
    Report report{"classify", {}, 0};
    const double tol = opts.tol.value_or(1e-9);
    for (const auto& rep : file.reps) report.items.push_back(classify_item(rep, tol));
    return report;
}

// ---------------------------------------------------------------------------
// su2
// ---------------------------------------------------------------------------

Report cmd_su2(std::optional<double> j, std::optional<double> max_j, int points, const Options& opts) {
    if (points < 3) throw UsageError("--points must be at least 3");
    const auto to_spin = [](double x) {
        try {
            return Spin::from_double(x);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
    };
    std::vector<Spin> spins;
    if (j) {
        spins.push_back(to_spin(*j));
    } else {
        const Spin top = to_spin(max_j.value_or(5.0));
        for (int t = 0; t <= top.twice(); ++t) spins.emplace_back(t);
    }

    const double tol = opts.tol.value_or(1e-6);
    Report report{"su2", {}, 0};
    for (const Spin s : spins) {
        Item item;
        item.label = "j = " + spin_label(s);
        const double fs = fs_indicator_su2(s, points);
        const Classification c = classify(su2_spin_rep(s), points);
        const TimeReversalReport tr = time_reversal_check(s, opts.seed);
        const RepKind expected = s.is_half_integer() ? RepKind::Quaternionic : RepKind::Real;
        item.values["j"] = s.value();
        item.values["dim"] = s.dim();
        item.values["fs_indicator"] = fs;
        item.values["kind"] = kind_name(c.kind);
        item.values["j_square_sign"] = c.j_square_sign;
        item.values["time_reversal_anticommutator"] = tr.max_anticommutator;
        item.values["expectation_defect"] = tr.max_expectation_defect;
        item.values["rotation_phase_defect"] = tr.rotation_phase_defect;
        item.pass = std::abs(fs - kind_sign(expected)) < tol && c.kind == expected && tr.pass;
        item.summary = kind_summary(c.kind, fs, c.j_square_sign) + ", |JA + AJ| = " + sci(tr.max_anticommutator);
        report.items.push_back(std::move(item));
    }
    return report;
}

// ---------------------------------------------------------------------------
// jordan
// ---------------------------------------------------------------------------

Report cmd_jordan(std::string_view algebra, int samples, const Options& opts) {
    const JordanKind kind = [&] {
        try {
            return JordanKind::parse(algebra);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
    }();
    if (kind.is_exceptional() && kind.n() != 3)
        throw UsageError("octonionic matrices form a Jordan algebra only up to 3 x 3; use hO:3");
    if (samples < 1) throw UsageError("--samples must be positive");

    const double tol = opts.tol.value_or(1e-9);
    std::mt19937_64 rng(opts.seed);
    std::vector<JordanElement> as, bs;
    for (int k = 0; k < samples; ++k) {
        as.push_back(random_element(kind, rng));
        bs.push_back(random_element(kind, rng));
    }
    const JordanElement one = JordanElement::unit(kind);

    Report report{"jordan " + kind.name(), {}, 0};

    MaxOf identity, power, commutativity, unit, symmetry;
    double min_reality = INFINITY;
    for (std::size_t k = 0; k < as.size(); ++k) {
        const auto& a = as[k];
        const auto& b = bs[k];
        identity(check_jordan_identity(a, b));
        power(power_associativity_residual(a));
        commutativity(norm(jordan_product(a, b) - jordan_product(b, a)));
        unit(norm(jordan_product(one, a) - a));
        const double ab = trace_inner(a, b);
        symmetry(std::abs(ab - trace_inner(b, a)) / std::max(1.0, std::abs(ab)));
        min_reality = std::min(min_reality, trace_inner(a, a) / (norm(a) * norm(a)));
    }
    report.items.push_back(residual_item("jordan identity", identity.value, tol));
    report.items.push_back(residual_item("power associativity", power.value, tol));
    report.items.push_back(residual_item("commutativity", commutativity.value, tol));
    report.items.push_back(residual_item("unit law", unit.value, tol));
    report.items.push_back(residual_item("trace form symmetry", symmetry.value, tol));
    {
        Item item{"formal reality", min_reality > 0.0, "min tr(a o a) / |a|² = " + fixed6(min_reality), {}};
        item.values["min_ratio"] = min_reality;
        report.items.push_back(std::move(item));
    }

    // states
    {
        const JordanState rho0 = max_ignorance(kind);
        const double tr1 = trace(one);
        MaxOf defect;
        for (const auto& a : as)
            defect(std::abs(state_eval(rho0, a) - trace(a) / tr1) / std::max(1.0, std::abs(trace(a) / tr1)));
        const double normalization = std::abs(state_eval(rho0, one) - 1.0);
        Item item{"maximal ignorance state", defect.value < 1e-12 && normalization < 1e-12, "", {}};
        item.values["unit_expectation_defect"] = normalization;
        item.values["max_defect_vs_trace_ratio"] = defect.value;
        std::string rho;
        if (kind.is_spin_factor()) {
            rho = "rho0 = (0, " + fixed6(rho0.density().spin_time()) + ")";
        } else {
            rho = "rho0 = diag(";
            for (std::size_t i = 0; i < kind.n(); ++i) rho += (i ? ", " : "") + fixed6(rho0.density().coords()[i]);
            rho += ")";
            // the displayed 2 x 2 state must come out exactly
            if (kind == JordanKind::hermitian(Algebra::C, 2)) {
                const bool exact = rho0.density() == JordanElement(kind, {0.5, 0.5, 0.0, 0.0});
                item.values["rho0_is_half_identity"] = exact;
                item.pass = item.pass && exact;
            }
        }
        item.values["rho0"] = std::vector<double>(rho0.density().coords().begin(), rho0.density().coords().end());
        item.summary = rho + ", max |<a>0 - tr(a)/tr(1)| = " + sci(defect.value);
        report.items.push_back(std::move(item));
    }

    // cones
    std::vector<JordanElement> squares;
    for (const auto& a : as) squares.push_back(jordan_product(a, a));
    {
        const double margin = dual_cone_margin(one, squares);
        Item item{"unit in dual cone", margin > 0.0, "min <1, a o a> = " + fixed6(margin), {}};
        item.values["min_margin"] = margin;
        report.items.push_back(std::move(item));
    }
    if (!kind.is_exceptional()) {
        std::vector<JordanElement> positives;
        for (int k = 0; k < samples; ++k) positives.push_back(random_positive(kind, rng));
        const auto all_positive = std::all_of(positives.begin(), positives.end(), [](const auto& p) { return is_positive(p); });
        double margin = INFINITY;
        for (const auto& p : positives) margin = std::min(margin, dual_cone_margin(p, positives));
        Item item{"cone self-duality sample", all_positive && margin > 0.0,
                  "min <p, q> over positive pairs = " + fixed6(margin), {}};
        item.values["all_samples_positive"] = all_positive;
        item.values["min_margin"] = margin;
        report.items.push_back(std::move(item));
    }
    if (kind.is_spin_factor()) {
        // spread t so both sides of the lightcone are hit
        std::normal_distribution<double> gauss(0.0, 2.0);
        int agree = 0, positive = 0;
        for (const auto& a : as) {
            const JordanElement shifted = a + one * gauss(rng);
            const bool cone = is_positive(shifted);
            const bool spectral = eigenvalues(shifted).front() > 0.0;
            agree += cone == spectral;
            positive += cone;
        }
        const double fraction = static_cast<double>(agree) / samples;
        Item item{"lightcone agreement", agree == samples,
                  fixed6(100.0 * fraction) + "% (" + std::to_string(positive) + " of " + std::to_string(samples) +
                      " inside)",
                  {}};
        item.values["agreement"] = fraction;
        item.values["inside"] = positive;
        report.items.push_back(std::move(item));
    }

    if (!kind.is_spin_factor() && kind.n() == 2) {
        const H2SpinIsomorphism phi = h2_spin_isomorphism(kind.algebra());
        MaxOf hom, roundtrip;
        for (std::size_t k = 0; k < as.size(); ++k) {
            hom(norm(phi(jordan_product(as[k], bs[k])) - jordan_product(phi(as[k]), phi(bs[k]))));
            roundtrip(norm(phi.inverse(phi(as[k])) - as[k]));
        }
        Item item = residual_item("isomorphism with " + phi.target().name(), std::max(hom.value, roundtrip.value),
                                  std::min(tol, 1e-10));
        item.values["homomorphism_residual"] = hom.value;
        item.values["roundtrip_residual"] = roundtrip.value;
        report.items.push_back(std::move(item));
    }
    return report;
}

// ---------------------------------------------------------------------------
// tensor-table
// ---------------------------------------------------------------------------

Report cmd_tensor_table(const Options& /*opts*/) {
    const RepKind kinds[] = {RepKind::Real, RepKind::Complex, RepKind::Quaternionic};
    const auto structure = [](RepKind k) {
        return k == RepKind::Real ? AntilinearMap::conjugation(2) : underlying_complex(1).structure.j();
    };
    const auto spin_of = [](RepKind k) { return k == RepKind::Real ? Spin(2) : Spin(1); };

    Report report{"tensor-table", {}, 0};
    for (const RepKind a : kinds)
        for (const RepKind b : kinds) {
            Item item;
            item.label = std::string(kind_name(a)) + " x " + kind_name(b);
            const RepKind expected = classify_tensor(a, b);
            item.values["kind"] = kind_name(expected);
            item.values["sign_product"] = kind_sign(a) * kind_sign(b);
            item.pass = kind_sign(expected) == kind_sign(a) * kind_sign(b);
            item.summary = kind_name(expected);
            if (a != RepKind::Complex && b != RepKind::Complex) {
                const AntilinearMap jt = tensor_antilinear(structure(a), structure(b));
                const int sign = square_sign(jt);
                item.values["constructed_j_square_sign"] = sign;
                item.values["antiunitarity_defect"] = jt.antiunitarity_defect();
                item.pass = item.pass && jt.is_antiunitary() && sign == kind_sign(expected);

                // the same rule on SU(2): spin 1 is real, spin 1/2 quaternionic
                const Spin sa = spin_of(a), sb = spin_of(b);
                const auto components = isotypic_components(tensor(su2_spin_rep(sa), su2_spin_rep(sb)));
                bool agree = true;
                std::string spins;
                for (const auto& c : components) {
                    agree = agree && classify(c.rep).kind == expected;
                    spins += (spins.empty() ? "" : ", ") + spin_label(c.spin);
                }
                item.values["su2_components_agree"] = agree;
                item.pass = item.pass && agree;
                item.summary += " (J² = " + signed_one(kind_sign(a)) + " x " + signed_one(kind_sign(b)) + " = " +
                                signed_one(sign) + "; spin " + spin_label(sa) + " x " + spin_label(sb) + " = " + spins +
                                ")";
            }
            report.items.push_back(std::move(item));
        }
    return report;
}

// ---------------------------------------------------------------------------
// functors
// ---------------------------------------------------------------------------

namespace {

template <class KIn, class Push, class Commutation>
Item functor_item(std::string label, std::size_t n, std::size_t space_dim, std::size_t expected_dim, Push push,
                  Commutation commutation, std::mt19937_64& rng, double tol) {
    const auto t1 = random_matrix<KIn>(n, n, rng);
    const auto t2 = random_matrix<KIn>(n, n, rng);
    const auto p1 = push(t1);
    const auto p2 = push(t2);
    const double scale = std::max(1.0, norm(p1) * norm(p2));
    const double dagger = distance(push(adjoint(t1)), adjoint(p1));
    const double composition = distance(push(t1 * t2), p1 * p2) / scale;
    const double commutes = std::max(commutation(p1), commutation(p2)) / std::max(1.0, norm(p1) + norm(p2));
    const bool faithful = !(p1 == p2);
    const bool dims = space_dim == expected_dim && p1.rows() == expected_dim && p1.cols() == expected_dim;

    Item item;
    item.label = std::move(label);
    item.pass = dims && dagger < tol && composition < tol && commutes < tol && faithful;
    item.values["source_dim"] = n;
    item.values["target_dim"] = space_dim;
    item.values["dagger_defect"] = dagger;
    item.values["composition_defect"] = composition;
    item.values["structure_commutation_defect"] = commutes;
    item.values["faithful"] = faithful;
    item.summary = "dim " + std::to_string(n) + " -> " + std::to_string(space_dim) + ", dagger " + sci(dagger) +
                   ", composition " + sci(composition) + ", commutation " + sci(commutes) +
                   (faithful ? ", faithful" : ", NOT faithful");
    return item;
}

double real_commutator(const RMatrix& t, const RMatrix& j) { return norm(t * j - j * t); }
double quat_commutator(const HMatrix& t, const HMatrix& j) { return norm(t * j - j * t); }

}  // namespace

Report cmd_functors(std::size_t n, const Options& opts) {
    if (n < 1) throw UsageError("--dim must be positive");
    const double tol = opts.tol.value_or(1e-10);
    std::mt19937_64 rng(opts.seed);
    Report report{"functors", {}, 0};

    const auto cx = complexify(n);
    report.items.push_back(functor_item<double>(
        "complexify R->C", n, cx.dim, n, [](const RMatrix& t) { return complexify(t); },
        [&](const CMatrix& m) { return cx.structure.j().commutator_norm(m); }, rng, tol));

    const auto re = underlying_real(n);
    report.items.push_back(functor_item<Complex>(
        "underlying real C->R", n, re.dim, 2 * n, [](const CMatrix& t) { return underlying_real(t); },
        [&](const RMatrix& m) { return real_commutator(m, re.complex_structure); }, rng, tol));

    const auto uc = underlying_complex(n);
    report.items.push_back(functor_item<Quaternion>(
        "underlying complex H->C", n, uc.dim, 2 * n, [](const HMatrix& t) { return underlying_complex(t); },
        [&](const CMatrix& m) { return uc.structure.j().commutator_norm(m); }, rng, tol));

    const auto qc = quaternify(n);
    report.items.push_back(functor_item<Complex>(
        "quaternify C->H", n, qc.dim, n, [](const CMatrix& t) { return quaternify(t); },
        [&](const HMatrix& m) { return quat_commutator(m, qc.structure); }, rng, tol));

    const auto rq = underlying_real_quat(n);
    report.items.push_back(functor_item<Quaternion>(
        "underlying real H->R", n, rq.dim, 4 * n, [](const HMatrix& t) { return underlying_real_quat(t); },
        [&](const RMatrix& m) {
            return std::max(real_commutator(m, rq.structure.j()), real_commutator(m, rq.structure.k()));
        },
        rng, tol));

    const auto qr = quaternify_real(n);
    report.items.push_back(functor_item<double>(
        "quaternify R->H", n, qr.dim, n, [](const RMatrix& t) { return quaternify_real(t); },
        [&](const HMatrix& m) { return std::max(quat_commutator(m, qr.j), quat_commutator(m, qr.k)); }, rng, tol));

    {
        const auto t = random_matrix<Quaternion>(n, n, rng);
        const RMatrix p = quat_to_realified_complex_basis(n);
        const double defect = distance(p * underlying_real_quat(t), underlying_real(underlying_complex(t)) * p);
        Item item{"composite H->C->R", defect < tol, "basis-change defect " + sci(defect), {}};
        item.values["defect"] = defect;
        report.items.push_back(std::move(item));
    }
    {
        const std::size_t recovered = quaternify_roundtrip_dimension(qc);
        Item item{"quaternify roundtrip", recovered == n,
                  "recovered complex dim " + std::to_string(recovered) + " from H^" + std::to_string(n), {}};
        item.values["recovered_dim"] = recovered;
        report.items.push_back(std::move(item));
    }
    {
        const std::size_t fixed = real_form_dimension(cx.structure);
        Item item{"real form of complexification", fixed == n,
                  "fixed points of J have real dim " + std::to_string(fixed), {}};
        item.values["real_form_dim"] = fixed;
        report.items.push_back(std::move(item));
    }
    return report;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

Report cmd_spectrum(std::string_view system, std::size_t dim, int count, const Options& opts) {
    if (system == "C")
        throw UsageError("complex generators carry no symmetry constraint; use --system R or H");
    if (system != "R" && system != "H") throw UsageError("--system must be R or H");
    if (dim < 1) throw UsageError("--dim must be positive");
    if (count < 1) throw UsageError("--count must be positive");

    const double tol = opts.tol.value_or(1e-8);
    const bool real = system == "R";
    std::mt19937_64 rng(opts.seed);
    Report report{"spectrum", {}, 0};

    const AntilinearMap j = real ? complexify(dim).structure.j() : underlying_complex(dim).structure.j();
    HMatrix first_quaternionic;
    for (int k = 0; k < count; ++k) {
        CMatrix s;
        if (real) {
            s = complexify(random_skew_adjoint<double>(dim, rng));
        } else {
            const HMatrix h = random_skew_adjoint<Quaternion>(dim, rng);
            if (k == 0) first_quaternionic = h;
            s = underlying_complex(h);
        }
        const SpectrumReport sr = symmetric_spectrum_check(s, j, tol);
        Item item;
        item.label = std::string(system) + "^" + std::to_string(dim) + " #" + std::to_string(k);
        item.pass = sr.symmetric;
        item.values["eigenvalues"] = sr.eigenvalues;
        item.values["max_pairing_defect"] = sr.max_pairing_defect;
        item.values["max_eigenvector_defect"] = sr.max_eigenvector_defect;
        std::string pairs;
        for (std::size_t i = sr.eigenvalues.size() / 2; i < sr.eigenvalues.size(); ++i)
            pairs += (pairs.empty() ? "" : " ") + fixed6(sr.eigenvalues[i]);
        item.summary = "+-{" + pairs + "}, pairing " + sci(sr.max_pairing_defect) + ", eigenvector " +
                       sci(sr.max_eigenvector_defect);
        report.items.push_back(std::move(item));
    }

    if (real) {
        Item item{"no self-adjoint A over R", false, "", {}};
        try {
            split_iA(random_skew_adjoint<double>(dim, rng));
            item.summary = "split_iA unexpectedly accepted a real generator";
        } catch (const Unsupported&) {
            item.pass = true;
            item.summary = "S = iA needs a number i; real generator rejected";
        }
        report.items.push_back(std::move(item));
    } else {
        const ObstructionReport ob = quaternionic_obstruction_witness(first_quaternionic, opts.seed);
        Item item{"A(v) = S(v) i is not H-linear", ob.found && ob.defect > ob.threshold,
                  "|A(vj) - A(v)j| = " + fixed6(ob.defect) + " > " + fixed6(ob.threshold), {}};
        item.values["defect"] = ob.defect;
        item.values["threshold"] = ob.threshold;
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace threefold::cli
