use serde::Serialize;

use super::{build_complex, elementary, ComplexCase, ComplexRep};
use crate::curvature::PMap;
use crate::error::{Error, Result};
use crate::exact::{bilinear, rank, CScalar, Field, Matrix};
use crate::reps::LieRep;

/// An element `φ ∈ V ⊗ h`: row `v`, column `a` holds the coefficient of
/// `b_v ⊗ B_a` for the bases of `V` and `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HighestVector {
    pub case: ComplexCase,
    pub tensor: Matrix<CScalar>,
}

impl HighestVector {
    /// Number of independent `h`-legs.
    pub fn legs(&self) -> usize {
        rank(&self.tensor)
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }
}

/// One summand `c · e_I ⊗ E_{a,b}`, positions 0-based for `I`, 1-based for `E`.
struct Term {
    coeff: i64,
    vector: Vec<usize>,
    leg: Matrix<CScalar>,
}

fn terms(case: ComplexCase) -> Vec<Term> {
    let size = case.std_dim();
    let e = |a, b| elementary(size, a, b);
    let t = |coeff, vector: Vec<usize>, leg| Term { coeff, vector, leg };
    match case {
        ComplexCase::Sp(n) => (2..=n).map(|i| t(1, vec![0, i - 1], e(1, i).minus(&e(n + i, n + 1)))).collect(),
        ComplexCase::SoEven(m) | ComplexCase::SoOdd(m) => {
            let odd = matches!(case, ComplexCase::SoOdd(_));
            // Positions 3..m, then e₀ (position 2m+1) in the odd case.
            let mut others: Vec<(usize, usize)> = (3..=m).map(|i| (i, m + i)).collect();
            if odd {
                others.push((2 * m + 1, 2 * m + 1));
            }
            let mut out = Vec::new();
            for &(i, minus_i) in &others {
                out.push(t(1, vec![0, i - 1], e(2, i).minus(&e(minus_i, m + 2))));
            }
            for &(i, minus_i) in &others {
                out.push(t(-1, vec![1, i - 1], e(1, i).minus(&e(minus_i, m + 1))));
            }
            out
        }
        ComplexCase::Sl8 => (1..=5).map(|i| t(1, vec![0, 1, 2, i - 1], e(1, i))).collect(),
    }
}

/// The closed-form highest vector of the case, transcribed term by term.
pub fn highest_vector(rep: &ComplexRep) -> Result<HighestVector> {
    let mut tensor = Matrix::zeros(rep.dim_v(), rep.dim_h());
    for term in terms(rep.case()) {
        let Some(v) = rep.product_coords(&term.vector) else {
            continue;
        };
        let a = rep
            .h_coords(&term.leg)
            .ok_or_else(|| Error::NotInAlgebra(format!("leg of {} highest vector", rep.case())))?;
        let c = CScalar::from_int(term.coeff);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if !aj.is_zero() {
                    let x = &tensor[(i, j)] + &(&c * &(vi * aj));
                    tensor[(i, j)] = x;
                }
            }
        }
    }
    Ok(HighestVector { case: rep.case(), tensor })
}

/// `φ` as a map `V → h` through the form: `φ(x) = Σ (b_v, x) φ_v`.
pub fn as_pmap(rep: &ComplexRep, phi: &HighestVector) -> PMap<CScalar> {
    PMap::from_coeffs(rep.module().gram().mul(&phi.tensor))
}

/// `(P(x)y, z) + (P(y)z, x) + (P(z)x, y)`.
pub fn cyclic_value<F: Field>(rep: &LieRep<F>, p: &PMap<F>, x: &[F], y: &[F], z: &[F]) -> F {
    let g = rep.gram();
    let term = |u: &[F], v: &[F], w: &[F]| bilinear(g, &p.eval(rep, u).mul_vec(v), w);
    term(x, y, z).plus(&term(y, z, x)).plus(&term(z, x, y))
}

pub fn obstruction_value(
    rep: &ComplexRep,
    phi: &HighestVector,
    x: &[CScalar],
    y: &[CScalar],
    z: &[CScalar],
) -> CScalar {
    cyclic_value(rep.module(), &as_pmap(rep, phi), x, y, z)
}

/// The evaluation triple of each case, as labelled decomposable vectors.
pub fn test_triple(case: ComplexCase) -> Result<[Vec<&'static str>; 3]> {
    let small = || Err(Error::InvalidParameter(format!("{case}: evaluation triple needs rank >= 3")));
    Ok(match case {
        ComplexCase::Sp(_) => [vec!["e-1", "e-2"], vec!["e2", "e3"], vec!["e-1", "e-3"]],
        ComplexCase::SoEven(m) | ComplexCase::SoOdd(m) if m < 3 => return small(),
        ComplexCase::SoEven(_) | ComplexCase::SoOdd(_) => [vec!["e-1", "e-3"], vec!["e1", "e3"], vec!["e-1", "e-2"]],
        ComplexCase::Sl8 => [vec!["e5", "e6", "e7", "e8"], vec!["e2", "e4", "e5", "e6"], vec!["e3", "e4", "e7", "e8"]],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub case: ComplexCase,
    pub dim_v: usize,
    pub dim_h: usize,
    pub legs: usize,
    pub triple: [Vec<&'static str>; 3],
    pub value: CScalar,
    pub verdict: &'static str,
}

impl ObstructionReport {
    pub fn nonzero(&self) -> bool {
        !self.value.is_zero()
    }
}

/// Builds the case, its highest vector, and evaluates the cyclic sum on the triple.
pub fn run_obstruction(case: ComplexCase) -> Result<ObstructionReport> {
    let rep = build_complex(case)?;
    let phi = highest_vector(&rep)?;
    let triple = test_triple(case)?;
    let [x, y, z] = [&triple[0], &triple[1], &triple[2]].map(|t| rep.vector(t));
    let value = obstruction_value(&rep, &phi, &x?, &y?, &z?);
    let verdict = if value.is_zero() { "inconclusive" } else { "not in P(h)" };
    Ok(ObstructionReport { case, dim_v: rep.dim_v(), dim_h: rep.dim_h(), legs: phi.legs(), triple, value, verdict })
}

/// Eigenvalues of the Cartan elements on `φ`, or `None` if `φ` is not a
/// weight vector. `H·φ = ρ(H)Φ + Φ ad(H)ᵀ`.
pub fn weights(rep: &ComplexRep, phi: &HighestVector) -> Result<Option<Vec<CScalar>>> {
    let d = rep.dim_h();
    let Some(pivot) = phi.tensor.data().iter().position(|x| !x.is_zero()) else {
        return Ok(None);
    };
    let mut out = Vec::new();
    for h in rep.cartan() {
        let rho = rep.restricted_action(&h)?;
        let ad_cols = rep
            .std_algebra()
            .iter()
            .map(|b| rep.h_coords(&h.commutator(b)).ok_or_else(|| Error::NotInAlgebra("Cartan bracket".into())))
            .collect::<Result<Vec<_>>>()?;
        let ad = Matrix::from_cols(d, &ad_cols);
        let moved = rho.mul(&phi.tensor).plus(&phi.tensor.mul(&ad.transpose()));
        let lambda = moved.data()[pivot].divide(&phi.tensor.data()[pivot]);
        if moved != phi.tensor.scale(&lambda) {
            return Ok(None);
        }
        out.push(lambda);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(case: ComplexCase, x: &[&str], y: &[&str], z: &[&str]) -> CScalar {
        let rep = build_complex(case).unwrap();
        let phi = highest_vector(&rep).unwrap();
        let (x, y, z) = (rep.vector(x).unwrap(), rep.vector(y).unwrap(), rep.vector(z).unwrap());
        obstruction_value(&rep, &phi, &x, &y, &z)
    }

    #[test]
    fn sp_value() {
        assert_eq!(value(ComplexCase::Sp(3), &["e-1", "e-2"], &["e2", "e3"], &["e-1", "e-3"]), CScalar::from_int(2));
    }

    #[test]
    fn so_values() {
        for case in [ComplexCase::SoEven(3), ComplexCase::SoOdd(3)] {
            let v = value(case, &["e-1", "e-3"], &["e1", "e3"], &["e-1", "e-2"]);
            assert_eq!(v, CScalar::ONE, "{case}");
        }
    }

    #[test]
    fn sl8_value() {
        let v =
            value(ComplexCase::Sl8, &["e5", "e6", "e7", "e8"], &["e2", "e4", "e5", "e6"], &["e3", "e4", "e7", "e8"]);
        assert_eq!(v, CScalar::from_int(-1));
    }

    #[test]
    fn reports() {
        let r = run_obstruction(ComplexCase::Sl8).unwrap();
        assert_eq!(r.value, CScalar::from_int(-1));
        assert_eq!(r.verdict, "not in P(h)");
        assert!(run_obstruction(ComplexCase::SoEven(2)).is_err());
    }

    #[test]
    fn leg_counts() {
        for (case, legs) in [(ComplexCase::Sp(3), 2), (ComplexCase::SoEven(3), 2), (ComplexCase::Sl8, 2)] {
            let rep = build_complex(case).unwrap();
            assert_eq!(highest_vector(&rep).unwrap().legs(), legs, "{case}");
        }
    }

    #[test]
    fn phi_is_a_weight_vector() {
        for case in [ComplexCase::Sp(3), ComplexCase::SoEven(3), ComplexCase::SoOdd(3), ComplexCase::Sl8] {
            let rep = build_complex(case).unwrap();
            let phi = highest_vector(&rep).unwrap();
            assert!(weights(&rep, &phi).unwrap().is_some(), "{case}");
        }
    }

    #[test]
    fn zero_phi_gives_zero() {
        let rep = build_complex(ComplexCase::Sp(3)).unwrap();
        let zero = HighestVector { case: rep.case(), tensor: Matrix::zeros(rep.dim_v(), rep.dim_h()) };
        let x = rep.vector(&["e1", "e-2"]).unwrap();
        assert!(obstruction_value(&rep, &zero, &x, &x, &x).is_zero());
    }

    #[test]
    fn rescaling_scales_value() {
        let rep = build_complex(ComplexCase::Sp(3)).unwrap();
        let phi = highest_vector(&rep).unwrap();
        let three = CScalar::from_int(3);
        let scaled = HighestVector { case: phi.case, tensor: phi.tensor.scale(&three) };
        let (x, y, z) = (
            rep.vector(&["e-1", "e-2"]).unwrap(),
            rep.vector(&["e2", "e3"]).unwrap(),
            rep.vector(&["e-1", "e-3"]).unwrap(),
        );
        assert_eq!(obstruction_value(&rep, &scaled, &x, &y, &z), CScalar::from_int(6));
    }
}
