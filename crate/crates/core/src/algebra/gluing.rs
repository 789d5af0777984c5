use super::AlgebraError;
use crate::diagram::{Assembly, TangleDiagram};

/// Glues `s` into hole `k` of `t`, hole point `i` to outer point `i` of `s`.
/// The holes of `s` take the place of hole `k`.
pub fn fill_hole(t: &TangleDiagram, k: usize, s: &TangleDiagram) -> Result<TangleDiagram, AlgebraError> {
    if k >= t.n_holes() {
        return Err(AlgebraError::HoleIndex {
            index: k,
            holes: t.n_holes(),
        });
    }
    let mut asm = Assembly::new();
    let outer = asm.add_tangle(t);
    let inner = asm.add_tangle(s);
    for i in 0..4 {
        asm.join(outer.holes[k][i], inner.outer[i]);
    }
    let mut holes = outer.holes[..k].to_vec();
    holes.extend(inner.holes);
    holes.extend_from_slice(&outer.holes[k + 1..]);
    Ok(asm.finish_tangle(outer.outer, holes))
}

/// Fills every hole of `t`, hole `j` with `parts[j]`; the result's holes are
/// the parts' holes in part order.
pub fn fill_all(t: &TangleDiagram, parts: &[TangleDiagram]) -> Result<TangleDiagram, AlgebraError> {
    if parts.len() != t.n_holes() {
        return Err(AlgebraError::LengthMismatch(format!(
            "{} parts for {} holes",
            parts.len(),
            t.n_holes()
        )));
    }
    let mut asm = Assembly::new();
    let outer = asm.add_tangle(t);
    let mut holes = Vec::new();
    for (hole, part) in outer.holes.iter().zip(parts) {
        let inner = asm.add_tangle(part);
        for (&h, &o) in hole.iter().zip(&inner.outer) {
            asm.join(h, o);
        }
        holes.extend(inner.holes);
    }
    Ok(asm.finish_tangle(outer.outer, holes))
}

/// `t1 +_h t2`: t1's NE and SE glued to t2's NW and SW.
pub fn connect_h_diagram(t1: &TangleDiagram, t2: &TangleDiagram) -> TangleDiagram {
    let mut asm = Assembly::new();
    let a = asm.add_tangle(t1);
    let b = asm.add_tangle(t2);
    asm.join(a.outer[3], b.outer[0]);
    asm.join(a.outer[2], b.outer[1]);
    let mut holes = a.holes;
    holes.extend(b.holes);
    asm.finish_tangle([a.outer[0], a.outer[1], b.outer[2], b.outer[3]], holes)
}

/// `t1 +_v t2`: t1's SW and SE glued to t2's NW and NE.
pub fn connect_v_diagram(t1: &TangleDiagram, t2: &TangleDiagram) -> TangleDiagram {
    let mut asm = Assembly::new();
    let a = asm.add_tangle(t1);
    let b = asm.add_tangle(t2);
    asm.join(a.outer[1], b.outer[0]);
    asm.join(a.outer[2], b.outer[3]);
    let mut holes = a.holes;
    holes.extend(b.holes);
    asm.finish_tangle([a.outer[0], b.outer[1], b.outer[2], a.outer[3]], holes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{crossing, fundamental, identity_spherical, twist, Fundamental};
    use crate::invariant::compute_invariant;
    use crate::IntMatrix;

    #[test]
    fn identity_fill_is_neutral() {
        let f1 = fundamental(Fundamental::One);
        assert_eq!(fill_hole(&identity_spherical(), 0, &f1).unwrap(), f1);
        let t = twist(3);
        assert_eq!(fill_all(&identity_spherical(), std::slice::from_ref(&t)).unwrap(), t);
        assert!(matches!(
            fill_hole(&t, 0, &f1),
            Err(AlgebraError::HoleIndex { index: 0, holes: 0 })
        ));
    }

    #[test]
    fn hole_bookkeeping() {
        let two = connect_h_diagram(&identity_spherical(), &identity_spherical());
        assert_eq!(two.n_holes(), 2);
        let filled = fill_hole(&two, 0, &identity_spherical()).unwrap();
        assert_eq!(filled.n_holes(), 2);
        let three = fill_hole(&two, 1, &two).unwrap();
        assert_eq!(three.n_holes(), 3);
    }

    #[test]
    fn stacked_and_side_by_side_sums() {
        let e = connect_v_diagram(&crossing(), &identity_spherical());
        assert_eq!(
            compute_invariant(&e).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, 0], &[1, 1]])
        );
        let f = connect_h_diagram(&fundamental(Fundamental::One), &e);
        assert_eq!(
            compute_invariant(&f).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, 1], &[0, 0]])
        );
    }

    #[test]
    fn twists_add_horizontally() {
        assert_eq!(connect_h_diagram(&twist(2), &twist(3)), twist(5));
        for (p, r) in [(2, -5), (-1, -1), (0, 4)] {
            let f = compute_invariant(&connect_h_diagram(&twist(p), &twist(r))).unwrap();
            assert_eq!(f, IntMatrix::column(vec![p + r, 1]).unwrap());
        }
    }
}
