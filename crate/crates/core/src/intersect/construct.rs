use rayon::prelude::*;
use serde::Serialize;

use super::grid::{classify_case, marked_quadruple, CaseKind, GridPoint};
use super::labeling::{base_labeling, base_square, cover_from_labeling, cover_square, EdgeLabeling};
use crate::autos::{affine_autos, auto_from_image, fixed_points, AffineAuto, Derivative};
use crate::curves::{theorem_check, TheoremReport, THEOREM_TOL};
use crate::elliptic::{weierstrass_bridge, EMinus1, TorsionPoint};
use crate::error::{EllipticError, IntersectError};
use crate::format::{ComplexJson, OrigamiJson};
use crate::origami::Origami;

/// Which full row and column of labels were added to the base labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HolonomyClass {
    pub row: bool,
    pub column: bool,
}

impl HolonomyClass {
    pub const ALL: [HolonomyClass; 4] = [
        HolonomyClass { row: false, column: false },
        HolonomyClass { row: true, column: false },
        HolonomyClass { row: false, column: true },
        HolonomyClass { row: true, column: true },
    ];
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateReport {
    pub class: HolonomyClass,
    pub connected: bool,
    pub passes: bool,
}

#[derive(Clone, Debug)]
pub struct DConstruction {
    pub point: GridPoint,
    pub case: CaseKind,
    pub class: HolonomyClass,
    pub labeling: EdgeLabeling,
    pub origami: Origami,
    /// The lift of the rotation about the vertex `(0, 0)`.
    pub rotation: AffineAuto,
    pub candidates: Vec<CandidateReport>,
}

fn labeling_for(base: &EdgeLabeling, class: HolonomyClass) -> EdgeLabeling {
    let mut l = base.clone();
    if class.row {
        l.add_row_holonomy();
    }
    if class.column {
        l.add_column_holonomy();
    }
    l
}

fn projects_to_rotation(n: usize, a: &AffineAuto) -> bool {
    (0..a.pi.len()).all(|s| {
        let (x, y) = base_square(n, s);
        base_square(n, a.pi[s]) == ((2 * n - y - 1) % n, x)
    })
}

/// A lift with derivative S of the quarter turn about `(0, 0)` that has four fixed points
/// and whose square has four fixed points.
pub fn rotation_lift(o: &Origami, n: usize) -> Result<Option<AffineAuto>, IntersectError> {
    for a in affine_autos(o, Derivative::S) {
        if !projects_to_rotation(n, &a) {
            continue;
        }
        let sq = a.compose(&a);
        if fixed_points(o, &a)?.total() == 4 && fixed_points(o, &sq)?.total() == 4 {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// The translation exchanging the two leaves, if the cover has one.
pub fn leaf_swap(o: &Origami, n: usize) -> Option<AffineAuto> {
    let a = auto_from_image(o, Derivative::I, cover_square(n, 0, 0, 1))?;
    (0..o.n_squares()).all(|s| a.pi[s] == s ^ 1).then_some(a)
}

/// The double cover of the `n × n` torus branched over the rotation orbit of `p` that carries
/// a lift of the rotation as required. Exactly one holonomy class must qualify.
pub fn construct_d(p: GridPoint) -> Result<DConstruction, IntersectError> {
    marked_quadruple(p)?;
    let case = classify_case(p)?;
    let n = p.n;
    let base = base_labeling(p)?;
    let results: Vec<(CandidateReport, Option<(EdgeLabeling, Origami, AffineAuto)>)> = HolonomyClass::ALL
        .par_iter()
        .map(|&class| {
            let l = labeling_for(&base, class);
            let o = match cover_from_labeling(&l) {
                Ok(o) => o,
                Err(IntersectError::Disconnected) => {
                    return Ok((
                        CandidateReport {
                            class,
                            connected: false,
                            passes: false,
                        },
                        None,
                    ))
                }
                Err(e) => return Err(e),
            };
            let lift = rotation_lift(&o, n)?;
            let report = CandidateReport {
                class,
                connected: true,
                passes: lift.is_some(),
            };
            Ok((report, lift.map(|a| (l, o, a))))
        })
        .collect::<Result<_, IntersectError>>()?;
    let passing = results.iter().filter(|(r, _)| r.passes).count();
    if passing != 1 {
        return Err(IntersectError::UniquenessViolated(passing));
    }
    let candidates: Vec<CandidateReport> = results.iter().map(|(r, _)| r.clone()).collect();
    let (report, found) = results.into_iter().find(|(r, _)| r.passes).unwrap();
    let (labeling, origami, rotation) = found.unwrap();
    Ok(DConstruction {
        point: p,
        case,
        class: report.class,
        labeling,
        origami: origami.with_name(format!("D({}, {}; {})", p.a, p.b, n)),
        rotation,
        candidates,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateChecks {
    pub unique_class: bool,
    pub squares: bool,
    pub genus_3: bool,
    pub four_simple_zeros: bool,
    pub leaf_swap: bool,
    pub theorem_check: bool,
}

impl CertificateChecks {
    pub fn all(&self) -> bool {
        self.unique_class && self.squares && self.genus_3 && self.four_simple_zeros && self.leaf_swap && self.theorem_check
    }
}

/// Everything the pipeline produces for one grid point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub point: GridPoint,
    pub n: usize,
    pub order: usize,
    pub case: CaseKind,
    pub holonomy: HolonomyClass,
    pub squares: usize,
    pub genus: usize,
    pub stratum: Vec<usize>,
    /// The grid point `(a, b)` is read as `z = (a + ib)/n` on `ℂ/(ℤ + iℤ)`.
    pub bridge: String,
    pub x_t: ComplexJson,
    pub lambda: ComplexJson,
    pub theorem: TheoremReport,
    pub checks: CertificateChecks,
    pub pass: bool,
    pub origami: OrigamiJson,
}

/// Builds D for `p`, maps `p` to E₋₁ and checks the torsion criterion at the resulting λ.
pub fn pipeline(p: GridPoint) -> Result<Certificate, IntersectError> {
    let d = construct_d(p)?;
    let order = p.order();
    if order < 3 {
        return Err(IntersectError::TwoTorsionInput);
    }
    let point = weierstrass_bridge(p.a as i64, p.b as i64, p.n as i64)?;
    let measured = EMinus1::with_tol(1e-8).point_order(&point, order)?;
    if measured != Some(order) {
        return Err(EllipticError::OffCurve(EMinus1::default().residual(&point)).into());
    }
    let t = TorsionPoint { point, order };
    let theorem = theorem_check(&t, THEOREM_TOL)?;
    let o = &d.origami;
    let profile = o.singularity_profile();
    let n = p.n;
    let checks = CertificateChecks {
        unique_class: d.candidates.iter().filter(|c| c.passes).count() == 1,
        squares: o.n_squares() == 2 * n * n,
        genus_3: o.genus() == 3,
        four_simple_zeros: profile.stratum() == vec![1, 1, 1, 1],
        leaf_swap: leaf_swap(o, n).is_some(),
        theorem_check: theorem.pass,
    };
    let pass = checks.all();
    Ok(Certificate {
        point: p,
        n,
        order,
        case: d.case,
        holonomy: d.class,
        squares: o.n_squares(),
        genus: o.genus(),
        stratum: profile.stratum(),
        bridge: "z = (a + ib)/n".into(),
        x_t: theorem.x_t,
        lambda: theorem.lambda,
        theorem,
        checks,
        pass,
        origami: OrigamiJson::from(o),
    })
}

/// Summary of [`construct_d`] over every valid point of one grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepEntry {
    pub point: GridPoint,
    pub case: Option<CaseKind>,
    pub passing_classes: usize,
    pub squares: usize,
    pub genus: usize,
    pub stratum: Vec<usize>,
    pub regular_points: usize,
    pub leaf_swap: bool,
    pub error: Option<String>,
}

impl SweepEntry {
    pub fn ok(&self) -> bool {
        let n = self.point.n;
        self.error.is_none()
            && self.passing_classes == 1
            && self.squares == 2 * n * n
            && self.genus == 3
            && self.stratum == [1, 1, 1, 1]
            && self.regular_points == 2 * n * n - 8
            && self.leaf_swap
    }
}

pub fn sweep(n: usize) -> Vec<SweepEntry> {
    super::grid::valid_points(n)
        .into_par_iter()
        .map(|p| match construct_d(p) {
            Ok(d) => {
                let o = &d.origami;
                let profile = o.singularity_profile();
                SweepEntry {
                    point: p,
                    case: Some(d.case),
                    passing_classes: d.candidates.iter().filter(|c| c.passes).count(),
                    squares: o.n_squares(),
                    genus: o.genus(),
                    stratum: profile.stratum(),
                    regular_points: profile.regular_count(),
                    leaf_swap: leaf_swap(o, n).is_some(),
                    error: None,
                }
            }
            Err(e) => SweepEntry {
                point: p,
                case: classify_case(p).ok(),
                passing_classes: match e {
                    IntersectError::UniquenessViolated(k) => k,
                    _ => 0,
                },
                squares: 0,
                genus: 0,
                stratum: vec![],
                regular_points: 0,
                leaf_swap: false,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::labeling::case1_labeling;

    fn gp(a: i64, b: i64, n: usize) -> GridPoint {
        GridPoint::new(a, b, n).unwrap()
    }

    #[test]
    fn small_example() {
        let d = construct_d(gp(1, 0, 3)).unwrap();
        let o = &d.origami;
        assert_eq!(o.n_squares(), 18);
        assert_eq!(o.genus(), 3);
        assert_eq!(o.singularity_profile().regular_count(), 10);
        assert!(leaf_swap(o, 3).is_some());
        assert_eq!(d.case, CaseKind::Case4);
        assert_eq!(construct_d(gp(2, 2, 4)).unwrap_err(), IntersectError::TwoTorsionInput);
    }

    #[test]
    fn case1_agrees_with_search() {
        for p in [gp(2, 1, 5), gp(3, 1, 7), gp(3, 2, 8)] {
            let explicit = cover_from_labeling(&case1_labeling(p).unwrap()).unwrap();
            let searched = construct_d(p).unwrap().origami;
            assert!(explicit.is_isomorphic(&searched), "{p}");
        }
    }

    #[test]
    fn rotation_invariance() {
        for p in [gp(1, 0, 4), gp(2, 1, 5), gp(4, 1, 7)] {
            let a = construct_d(p).unwrap().origami;
            let b = construct_d(p.rotate90()).unwrap().origami;
            assert!(a.is_isomorphic(&b), "{p}");
        }
    }

    #[test]
    fn sweep_small_grids() {
        for n in 3..=6 {
            for e in sweep(n) {
                assert!(e.ok(), "{e:?}");
            }
        }
    }

    #[test]
    fn pipeline_certificates() {
        for n in [3, 4, 5] {
            let c = pipeline(gp(1, 0, n)).unwrap();
            assert!(c.pass, "{c:?}");
            assert_eq!(c.order, n);
        }
        assert_eq!(pipeline(gp(1, 1, 2)).unwrap_err(), IntersectError::TwoTorsionInput);
    }

    #[test]
    fn order_three_lambda_up_to_rotation() {
        // the rotation c̄ sends x to −x; the two resulting values of λ are 1 − ζ^{±2}
        let c = pipeline(gp(1, 0, 3)).unwrap();
        let l = c.lambda.re;
        assert!(c.lambda.im.abs() < 1e-9);
        let x = (1.0 + 2.0 / 3f64.sqrt()).sqrt();
        let zeta = (1.0 + x) / (1.0 - x);
        let candidates = [1.0 - zeta * zeta, 1.0 - 1.0 / (zeta * zeta)];
        assert!(candidates.iter().any(|v| (l - v).abs() < 1e-6), "{l}");
    }
}
