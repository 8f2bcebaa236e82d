use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use origami_lab::autos::{
    affine_autos, order_histogram, plus_minus_autos, quotient_by_translations, quotient_genus, translations, w, Derivative,
};
use origami_lab::curves::{
    apply_aut, critical_values, fixed_points_formula, kappa, on_curve, same_set, theorem_for_order, verify_identities, AutName,
    Curve, CurveParams,
};
use origami_lab::elliptic::{gaussian, lambda_from_point, torsion_points, EMinus1, EllipticPoint, ExactPoint};
use origami_lab::elliptic::{rot_c, weierstrass_bridge};
use origami_lab::error::IntersectError;
use origami_lab::intersect::{case1_labeling, construct_d, cover_from_labeling, pipeline, sweep, GridPoint};
use origami_lab::origami::Cylinder;
use origami_lab::quaternion::QuaternionElement as Q;
use origami_lab::veech::{act, cusp_count, veech_group, verify_characteristic_w, SL2Word};
use origami_lab::{quaternion_origami, torus_grid, Origami};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn criterion_1() -> Outcome {
    let o = quaternion_origami();
    let profile = o.singularity_profile();
    let cyl = o.horizontal_cylinders().cylinders;
    ensure(o.genus() == 3, format!("genus {}", o.genus()))?;
    ensure(profile.vertex_count == 4, format!("{} vertices", profile.vertex_count))?;
    ensure(profile.stratum() == [1, 1, 1, 1], format!("stratum {:?}", profile.stratum()))?;
    let want = Cylinder {
        circumference: 4,
        height: 1,
    };
    ensure(cyl == [want, want], format!("cylinders {cyl:?}"))?;
    Ok("genus 3, 4 vertices, H(1,1,1,1), two 4x1 horizontal cylinders".into())
}

fn random_origami(rng: &mut ChaCha8Rng) -> Origami {
    loop {
        let n = rng.gen_range(2..=9);
        let mut perm = || {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            p
        };
        let (h, v) = (perm(), perm());
        if let Ok(o) = Origami::from_images(h, v) {
            return o;
        }
    }
}

fn criterion_2() -> Outcome {
    let o = quaternion_origami();
    let vg = veech_group(&o);
    ensure(vg.index == 1, format!("index {}", vg.index))?;
    ensure(cusp_count(&o) == 1, format!("{} cusps", cusp_count(&o)))?;
    for n in 1..=4 {
        let t = torus_grid(n).map_err(|e| e.to_string())?;
        let idx = veech_group(&t).index;
        ensure(idx == 1, format!("torus_grid({n}) index {idx}"))?;
    }
    let s4: SL2Word = "S^4".parse().unwrap();
    let st6 = "ST".parse::<SL2Word>().unwrap().pow(6);
    let s2: SL2Word = "S^2".parse().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..20 {
        let r = random_origami(&mut rng);
        ensure(act(&s4, &r).is_isomorphic(&r), format!("S^4 on corpus[{k}]"))?;
        ensure(act(&st6, &r).is_isomorphic(&r), format!("(ST)^6 on corpus[{k}]"))?;
        for g in ["S", "T"] {
            let g: SL2Word = g.parse().unwrap();
            let lhs = act(&g.then_apply(&s2), &r);
            let rhs = act(&s2.then_apply(&g), &r);
            ensure(lhs.is_isomorphic(&rhs), format!("S^2 not central on corpus[{k}]"))?;
        }
    }
    Ok("index 1 and one cusp for W, torus_grid(1..4) index 1, relations on 20 random origamis".into())
}

fn criterion_3() -> Outcome {
    let r = verify_characteristic_w();
    ensure(r.epimorphism_count == 24, format!("{} epimorphisms", r.epimorphism_count))?;
    ensure(r.all_kernels_equal, "some epimorphism gives a different cover")?;
    Ok("24 epimorphisms F2 -> Q, all covers isomorphic to W".into())
}

fn criterion_4() -> Outcome {
    let o = quaternion_origami();
    let t = translations(&o);
    ensure(t.len() == 8, format!("{} translations", t.len()))?;
    let th = order_histogram(&t).map_err(|e| e.to_string())?;
    ensure(th == BTreeMap::from([(1, 1), (2, 1), (4, 6)]), format!("translation orders {th:?}"))?;
    ensure(
        t.iter().any(|a| t.iter().any(|b| a.compose(b) != b.compose(a))),
        "translations commute",
    )?;
    let minus = affine_autos(&o, Derivative::MinusI);
    ensure(minus.len() == 8, format!("{} autos with derivative -I", minus.len()))?;
    let all = plus_minus_autos(&o);
    let hist = order_histogram(&all).map_err(|e| e.to_string())?;
    ensure(hist == BTreeMap::from([(1, 1), (2, 7), (4, 8)]), format!("orders {hist:?}"))?;
    for row in w::fixed_point_table() {
        ensure(w::row_matches(&row), format!("fixed point row {}", row.name))?;
    }
    let pm1 = vec![w::translation(Q::ONE), w::translation(Q::MINUS_ONE)];
    let q = quotient_by_translations(&o, &pm1).map_err(|e| e.to_string())?;
    let two_by_two = Origami::from_images(vec![1, 0, 3, 2], vec![2, 3, 0, 1]).unwrap();
    ensure(q.is_isomorphic(&two_by_two), "W/{±1} has the wrong shape")?;
    ensure(quotient_genus(&o, &pm1).map_err(|e| e.to_string())? == 1, "W/{±1} not genus 1")?;
    let full = quotient_by_translations(&o, &t).map_err(|e| e.to_string())?;
    ensure(full.is_isomorphic(&torus_grid(1).unwrap()), "W/Q is not the unit torus")?;
    Ok("Q of translations, 8 autos with -I, orders {1:1, 2:7, 4:8}, fixed point table, quotients".into())
}

fn test_lambdas() -> Vec<(Complex64, u64)> {
    let mut out = vec![(c(2.0, 0.0), 1), (c(0.0, 1.0), 7), (c(1.0 / 3.0, 0.0), 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    while out.len() < 23 {
        let l = c(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        if l.norm() < 0.1 || (l - 1.0).norm() < 0.1 {
            continue;
        }
        out.push((l, out.len() as u64));
    }
    out
}

fn criterion_5() -> Outcome {
    for (l, seed) in test_lambdas() {
        let r = verify_identities(l, seed, 1e-9).map_err(|e| format!("{l}: {e}"))?;
        ensure(r.checks.len() == 8, format!("{l}: {} checks", r.checks.len()))?;
        ensure(r.all_pass(), format!("{l}: failed {:?}", r.failures()))?;
    }
    Ok("checks (a)-(h) pass for 2, i, 1/3 and 20 seeded random lambda".into())
}

fn criterion_6() -> Outcome {
    let tol = 1e-9;
    for (l, _) in test_lambdas() {
        let params = CurveParams::new(l).map_err(|e| e.to_string())?;
        for name in AutName::INVOLUTIONS {
            let fixed = fixed_points_formula(name, &params).map_err(|e| e.to_string())?;
            let mut images = Vec::new();
            for p in &fixed {
                ensure(on_curve(Curve::W, &params, p), format!("{name} at {l}: fixed point off W"))?;
                let q = apply_aut(name, &params, p).map_err(|e| e.to_string())?;
                ensure(q.approx_eq(p, tol), format!("{name} at {l}: {p} is not fixed"))?;
                images.push(kappa(name, &params, p).map_err(|e| e.to_string())?);
            }
            let crit = critical_values(name, &params).map_err(|e| e.to_string())?;
            ensure(same_set(&images, &crit, tol), format!("{name} at {l}: critical values differ"))?;
        }
    }
    Ok("fixed points and critical values of the six involutions at 23 lambda".into())
}

fn criterion_7() -> Outcome {
    let counts = (torsion_points(3).map_err(|e| e.to_string())?.len(), torsion_points(4).map_err(|e| e.to_string())?.len());
    ensure(counts == (8, 12), format!("torsion counts {counts:?}"))?;

    // exact group law over ℚ(i): T = (i, 1 − i)
    let t = ExactPoint::affine(gaussian(0, 1, 1), gaussian(1, -1, 1));
    let e = EMinus1::default();
    ensure(e.on_curve(&t), "T is not on E")?;
    let origin = ExactPoint::affine(gaussian(0, 0, 1), gaussian(0, 0, 1));
    let two_t = e.mul(2, &t).map_err(|e| e.to_string())?;
    ensure(two_t == origin, format!("2T = {two_t:?}"))?;
    ensure(e.point_order(&t, 12).map_err(|e| e.to_string())? == Some(4), "T does not have order 4")?;
    let lz = lambda_from_point(&t.to_numeric(), 1e-9).map_err(|e| e.to_string())?;
    ensure((lz.lambda - c(2.0, 0.0)).norm() < 1e-12, format!("lambda_T = {}", lz.lambda))?;

    let mut total = 0;
    for n in 3..=8 {
        let reports = theorem_for_order(n, 1e-8).map_err(|e| e.to_string())?;
        ensure(!reports.is_empty(), format!("no points of order {n}"))?;
        for r in &reports {
            ensure(r.pass, format!("theorem_check fails at order {n}, x = {:?}", r.x_t))?;
        }
        total += reports.len();
    }

    let control = CurveParams::new(c(1.0 / 3.0, 0.0)).map_err(|e| e.to_string())?;
    let order = origami_lab::curves::q_sigma_order(&control, 12, 1e-8).map_err(|e| e.to_string())?;
    ensure(order.is_none(), format!("lambda = 1/3 gives order {order:?}"))?;
    Ok(format!(
        "8 and 12 points of order 3 and 4, lambda_T = 2, {total} theorem checks for orders 3..8, no torsion order <= 12 at 1/3"
    ))
}

fn criterion_8() -> Outcome {
    let mut points = 0;
    for n in 3..=8 {
        for entry in sweep(n) {
            ensure(entry.ok(), format!("{}: {entry:?}", entry.point))?;
            points += 1;
        }
    }
    for (a, b, n) in [(2, 1, 5), (3, 1, 7)] {
        let p = GridPoint::new(a, b, n).unwrap();
        let explicit = cover_from_labeling(&case1_labeling(p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let d = construct_d(p).map_err(|e| e.to_string())?;
        ensure(explicit.is_isomorphic(&d.origami), format!("case 1 labeling differs at {p}"))?;
    }
    for (a, b, n) in [(0, 0, 4), (2, 0, 4), (2, 2, 4), (3, 3, 6), (0, 0, 5)] {
        let p = GridPoint::new(a, b, n).unwrap();
        ensure(
            matches!(construct_d(p), Err(IntersectError::TwoTorsionInput)),
            format!("{p} was not rejected"),
        )?;
    }
    Ok(format!("{points} grid points for n = 3..8, case 1 agrees at (2,1)/5 and (3,1)/7, 2-torsion rejected"))
}

fn criterion_9() -> Outcome {
    let e = EMinus1::with_tol(1e-6);
    let two_torsion = |x: f64| EllipticPoint::new(c(x, 0.0), c(0.0, 0.0));
    for n in [2, 4, 6, 8] {
        let h = n / 2;
        let got = [(h, 0, 1.0), (0, h, -1.0), (h, h, 0.0)];
        for (a, b, x) in got {
            let p = weierstrass_bridge(a, b, n).map_err(|e| e.to_string())?;
            ensure(e.eq(&p, &two_torsion(x)), format!("({a},{b})/{n} maps to {p:?}"))?;
        }
    }
    for n in 3..=8i64 {
        for a in 0..n {
            for b in 0..n {
                if (a, b) == (0, 0) {
                    continue;
                }
                let p = weierstrass_bridge(a, b, n).map_err(|e| e.to_string())?;
                let q = weierstrass_bridge(-b, a, n).map_err(|e| e.to_string())?;
                ensure(e.eq(&q, &rot_c(&p)), format!("rotation fails at ({a},{b})/{n}"))?;
            }
        }
    }
    for n in 3..=5 {
        let p = GridPoint::new(1, 0, n).unwrap();
        let cert = pipeline(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(cert.pass && cert.checks.all(), format!("{p}: certificate fails {:?}", cert.checks))?;
        ensure(cert.theorem.pass, format!("{p}: theorem check fails"))?;
    }
    Ok("half periods, rotation equivariance for n = 3..8, certificates for (1,0) with n = 3, 4, 5".into())
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (k, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {k}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {k}: {msg} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
