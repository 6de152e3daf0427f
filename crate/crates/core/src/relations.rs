//! Defining relations of a Poisson triple system, written as ternary
//! expressions with the right side subtracted from the left.
//!
//! Generators `a..e` are `1..5`.

use crate::ternary::{lie3, skew, sym, TernaryExpr};

const A: u8 = 1;
const B: u8 = 2;
const C: u8 = 3;
const D: u8 = 4;
const E: u8 = 5;

/// A named homogeneous relation.
#[derive(Clone, Debug)]
pub struct NamedExpr {
    pub name: &'static str,
    pub expr: TernaryExpr,
}

/// The degree-3 symmetries: total symmetry of `⟨⟩` (two generating
/// transpositions), skew-symmetry of `(,,)` and `[,,]`, and the cyclic sum
/// of `[,,]`.
pub fn degree3_symmetries() -> Vec<NamedExpr> {
    vec![
        NamedExpr {
            name: "symmetry of <> in slots 1,2",
            expr: TernaryExpr::new(vec![(1, sym(A, B, C)), (-1, sym(B, A, C))]),
        },
        NamedExpr {
            name: "symmetry of <> in slots 2,3",
            expr: TernaryExpr::new(vec![(1, sym(A, B, C)), (-1, sym(A, C, B))]),
        },
        NamedExpr { name: "skew-symmetry of ()", expr: TernaryExpr::new(vec![(1, skew(A, B, C)), (1, skew(B, A, C))]) },
        NamedExpr { name: "skew-symmetry of []", expr: TernaryExpr::new(vec![(1, lie3(A, B, C)), (1, lie3(B, A, C))]) },
        NamedExpr {
            name: "cyclic sum of []",
            expr: TernaryExpr::new(vec![(1, lie3(A, B, C)), (1, lie3(B, C, A)), (1, lie3(C, A, B))]),
        },
    ]
}

/// The nine degree-5 relations, numbered 1 to 9.
pub fn pts_relations() -> Vec<NamedExpr> {
    let r = |name, terms| NamedExpr { name, expr: TernaryExpr::new(terms) };
    vec![
        r("relation 1", vec![(1, sym(sym(A, B, C), D, E)), (-1, sym(A, B, sym(C, D, E)))]),
        r("relation 2", vec![(1, sym(skew(A, B, C), D, E)), (-1, skew(A, B, sym(C, D, E)))]),
        r("relation 3", vec![(1, skew(A, B, skew(C, D, E))), (-1, skew(C, D, skew(A, B, E)))]),
        r(
            "relation 4",
            vec![(1, sym(lie3(A, B, C), D, E)), (-1, skew(skew(A, B, E), C, D)), (-1, skew(A, B, skew(C, E, D)))],
        ),
        r(
            "relation 5",
            vec![
                (1, skew(sym(A, B, C), D, E)),
                (-1, skew(A, D, sym(B, C, E))),
                (-1, skew(B, D, sym(A, C, E))),
                (-1, skew(C, D, sym(A, B, E))),
            ],
        ),
        r(
            "relation 6",
            vec![
                (1, lie3(skew(A, B, C), D, E)),
                (-1, skew(lie3(A, B, D), E, C)),
                (1, skew(A, B, lie3(D, C, E))),
                (1, skew(D, C, lie3(A, B, E))),
                (1, skew(E, C, lie3(A, B, D))),
            ],
        ),
        r(
            "relation 7",
            vec![
                (1, skew(lie3(A, B, C), D, E)),
                (-1, skew(lie3(A, D, B), C, E)),
                (1, skew(lie3(B, D, A), C, E)),
                (1, skew(lie3(C, D, A), B, E)),
                (-1, skew(lie3(C, D, B), A, E)),
            ],
        ),
        r(
            "relation 8",
            vec![
                (1, lie3(A, B, lie3(C, D, E))),
                (-1, lie3(lie3(A, B, C), D, E)),
                (-1, lie3(C, lie3(A, B, D), E)),
                (-1, lie3(C, D, lie3(A, B, E))),
            ],
        ),
        r(
            "relation 9",
            vec![
                (1, lie3(sym(A, B, C), D, E)),
                (-1, skew(skew(A, D, B), E, C)),
                (1, skew(A, D, skew(E, C, B))),
                (-1, skew(skew(B, D, A), E, C)),
                (1, skew(B, D, skew(E, C, A))),
                (-1, skew(skew(C, D, B), E, A)),
                (1, skew(C, D, skew(E, A, B))),
            ],
        ),
    ]
}
