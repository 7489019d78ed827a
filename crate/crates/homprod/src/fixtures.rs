//! Named reference codes shipped with the crate. Their parameters are
//! pinned in the test suite.

use crate::code::CssCode;
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::poly::PolyMatrix;
use crate::products::{self, GroupAction, TwistSpec};

/// The boundary complex of a length-`len` cycle graph: edges → vertices,
/// edge j incident to vertices j−1 and j.
pub fn cycle_complex(len: usize) -> ChainComplex {
    ChainComplex::from_classical(&F2Matrix::circulant(len, &[0, 1]))
}

/// Parity checks of the [L,1,L] repetition code with L−1 independent rows.
pub fn repetition_checks(len: usize) -> F2Matrix {
    let mut h = F2Matrix::zeros(len - 1, len);
    for i in 0..len - 1 {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    h
}

/// Shor's [[9,1,3]] code with the redundant check set of its projective
/// plane tessellation: three weight-6 X-checks (rank 2) and seven
/// Z-checks (rank 6).
pub fn shor() -> CssCode {
    let hx = F2Matrix::from_rows(&["111111000", "000111111", "111000111"]).unwrap();
    let hz = F2Matrix::from_rows(&[
        "110000000",
        "011000000",
        "000110000",
        "101101101",
        "000011000",
        "000000110",
        "000000011",
    ])
    .unwrap();
    CssCode::new(hx, hz).unwrap()
}

/// The toric code on an L×L torus: tensor square of the cycle complex.
pub fn toric(l: usize) -> CssCode {
    let c = cycle_complex(l);
    products::tensor(&c, &c).to_css(1).unwrap()
}

/// The [[L² + (L−1)², 1, L]] surface code: hypergraph product of two
/// repetition codes.
pub fn surface(l: usize) -> CssCode {
    let h = repetition_checks(l);
    products::hypergraph_product(&h, &h)
}

/// The [[12,2,3]] twisted-torus code as a balanced product of the
/// length-3 and length-6 cycle graphs over Z₃.
pub fn fig8() -> CssCode {
    let c3 = cycle_complex(3);
    let c6 = cycle_complex(6);
    let shift1: Vec<usize> = (0..3).map(|i| (i + 1) % 3).collect();
    let shift2: Vec<usize> = (0..6).map(|i| (i + 2) % 6).collect();
    let act = GroupAction::cyclic(
        vec![shift1.clone(), shift1],
        vec![shift2.clone(), shift2],
    );
    products::balanced_product(&c3, &c6, &act)
        .expect("the cyclic shift action on cycle graphs is free")
        .to_css(1)
        .unwrap()
}

/// The same [[12,2,3]] code as a fiber bundle: length-2 cycle base,
/// length-3 cycle fiber, one incidence twisted by a unit shift.
pub fn fig8_fiber_bundle() -> CssCode {
    let base = cycle_complex(2);
    let fiber = cycle_complex(3);
    products::fiber_bundle(&base, &fiber, &TwistSpec::new([((0, 0), 1)]))
        .expect("twist references an incidence of the base")
}

/// The same [[12,2,3]] code as a lifted product of the boundary operators
/// of the two cycle graphs over F2[x]/(x³−1).
pub fn fig8_lifted() -> CssCode {
    // Boundary of the 3-cycle as a 1×1 matrix: 1 + x.
    let a = PolyMatrix::from_exponents(1, 1, 3, &[vec![0, 1]]).unwrap();
    // Boundary of the 6-cycle in Z₃-orbit coordinates (vertex orbits ×
    // edge orbits), with x the shift by two positions.
    let b = PolyMatrix::from_exponents(2, 2, 3, &[vec![0], vec![1], vec![0], vec![0]]).unwrap();
    products::lifted_product(&a, &b).expect("circulant sizes agree")
}

/// Looks up a fixture by CLI name: `shor`, `fig8`, `toric-L`, `surface-L`.
pub fn by_name(name: &str) -> Result<CssCode> {
    match name {
        "shor" => Ok(shor()),
        "fig8" => Ok(fig8()),
        _ => {
            if let Some(l) = name.strip_prefix("toric-") {
                let l: usize = l
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad fixture size in {name:?}")))?;
                if l < 2 {
                    return Err(Error::Parameter("toric size must be at least 2".into()));
                }
                Ok(toric(l))
            } else if let Some(l) = name.strip_prefix("surface-") {
                let l: usize = l
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad fixture size in {name:?}")))?;
                if l < 2 {
                    return Err(Error::Parameter("surface size must be at least 2".into()));
                }
                Ok(surface(l))
            } else {
                Err(Error::Parse(format!("unknown fixture {name:?}")))
            }
        }
    }
}
