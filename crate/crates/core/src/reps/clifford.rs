use super::{FieldMarker, LieRep, RepSpec};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

// Tensor factors: 0 = I, 1 = σx, 2 = σz, 3 = ε = [[0, 1], [−1, 0]].
// Distinct non-identity factors anticommute; ε is the only antisymmetric one.
type Word = [u8; 4];

fn factor(f: u8) -> Matrix {
    match f {
        0 => Matrix::from_ints(&[&[1, 0], &[0, 1]]),
        1 => Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        2 => Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        _ => Matrix::from_ints(&[&[0, 1], &[-1, 0]]),
    }
}

fn is_symmetric(w: &Word) -> bool {
    w.iter().filter(|&&f| f == 3).count() % 2 == 0
}

fn anticommute(a: &Word, b: &Word) -> bool {
    a.iter().zip(b).filter(|(x, y)| **x != 0 && **y != 0 && x != y).count() % 2 == 1
}

fn search(cands: &[Word], want: usize, chosen: &mut Vec<Word>, start: usize) -> bool {
    if chosen.len() == want {
        return true;
    }
    for i in start..cands.len() {
        if chosen.iter().all(|c| anticommute(c, &cands[i])) {
            chosen.push(cands[i]);
            if search(cands, want, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `count` real symmetric pairwise anticommuting `16 × 16` matrices with
/// entries in `{−1, 0, 1}`, squaring to the identity. At most 9 exist.
pub fn clifford_generators(count: usize) -> Result<Vec<Matrix>> {
    let mut cands = Vec::new();
    for code in 1..256u32 {
        let w: Word = [(code >> 6) as u8 & 3, (code >> 4) as u8 & 3, (code >> 2) as u8 & 3, code as u8 & 3];
        if is_symmetric(&w) {
            cands.push(w);
        }
    }
    let mut chosen = Vec::new();
    if !search(&cands, count, &mut chosen, 0) {
        return Err(Error::InvalidParameter(format!("no {count} anticommuting symmetric generators in dimension 16")));
    }
    Ok(chosen.iter().map(|w| w.iter().skip(1).fold(factor(w[0]), |acc, &f| acc.kron(&factor(f)))).collect())
}

/// `spin(9) ⊂ so(16)` spanned by `ΓᵢΓⱼ`, `i < j`.
pub fn spin9_rep() -> Result<LieRep> {
    let gammas = clifford_generators(9)?;
    let mut basis = Vec::with_capacity(36);
    for i in 0..9 {
        for j in i + 1..9 {
            basis.push(gammas[i].mul(&gammas[j]));
        }
    }
    LieRep::new(RepSpec::Spin9.to_string(), Matrix::<Scalar>::identity(16), basis, FieldMarker::Real)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relations() {
        let g = clifford_generators(9).unwrap();
        let id = Matrix::identity(16);
        for (i, a) in g.iter().enumerate() {
            assert!(a.is_symmetric());
            assert_eq!(a.mul(a), id);
            for b in &g[i + 1..] {
                assert!(a.mul(b).plus(&b.mul(a)).is_zero());
            }
        }
    }

    #[test]
    fn spin9_structure() {
        let rep = spin9_rep().unwrap();
        assert_eq!(rep.dim(), 36);
        assert!(rep.is_metric_skew());
        assert!(rep.closure_check());
        assert_eq!(rep.commutant().dim(), 1);
    }
}
