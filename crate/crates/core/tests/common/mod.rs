#![allow(dead_code)]

use gradeid::grading::GradingSpec;
use gradeid::groups::{GroupDescriptor, GroupElement};

pub fn residue(v: u64) -> GroupElement {
    GroupElement::Residue(v)
}

pub fn cyclic_spec(order: u64, tuple: &[u64]) -> GradingSpec {
    GradingSpec::new(
        GroupDescriptor::cyclic(order).unwrap(),
        tuple.iter().map(|&t| residue(t)).collect(),
    )
    .unwrap()
}

/// S3 as s^a r^b with index 3a+b and (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d).
pub fn s3_group() -> GroupDescriptor {
    let names: Vec<String> = ["e", "r", "r2", "s", "sr", "sr2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let table = (0..6)
        .map(|x| {
            (0..6)
                .map(|y| {
                    let (a, b, c, d) = (x / 3, x % 3, y / 3, y % 3);
                    let b = if c == 1 { (3 - b) % 3 } else { b };
                    3 * ((a + c) % 2) + (b + d) % 3
                })
                .collect()
        })
        .collect();
    GroupDescriptor::cayley(names, table).unwrap()
}

pub fn klein() -> GroupDescriptor {
    let z2 = GroupDescriptor::cyclic(2).unwrap();
    GroupDescriptor::product(vec![z2.clone(), z2]).unwrap()
}

pub fn pair(a: u64, b: u64) -> GroupElement {
    GroupElement::Tuple(vec![residue(a), residue(b)])
}

/// Z_n with g = (0..n-1), Z4 with (0,1), Z2xZ2 with all four elements and S3
/// with all six.
pub fn suite() -> Vec<(String, GradingSpec)> {
    let mut out = Vec::new();
    for n in 2..=5u64 {
        out.push((
            format!("Z{n} (0..{})", n - 1),
            cyclic_spec(n, &(0..n).collect::<Vec<_>>()),
        ));
    }
    out.push(("Z4 (0,1)".into(), cyclic_spec(4, &[0, 1])));
    let tuple = vec![pair(0, 0), pair(0, 1), pair(1, 0), pair(1, 1)];
    out.push(("Z2xZ2".into(), GradingSpec::new(klein(), tuple).unwrap()));
    out.push((
        "S3".into(),
        GradingSpec::new(s3_group(), (0..6).map(GroupElement::Label).collect()).unwrap(),
    ));
    out
}

/// Distinct-tuple gradings with partial support.
pub fn partial_suite() -> Vec<(String, GradingSpec)> {
    vec![
        ("Z4 (0,1)".into(), cyclic_spec(4, &[0, 1])),
        ("Z6 (0,2,3)".into(), cyclic_spec(6, &[0, 2, 3])),
        ("Z5 (0,1,3)".into(), cyclic_spec(5, &[0, 1, 3])),
        (
            "S3 (e,r,s)".into(),
            GradingSpec::new(
                s3_group(),
                vec![
                    GroupElement::Label(0),
                    GroupElement::Label(1),
                    GroupElement::Label(3),
                ],
            )
            .unwrap(),
        ),
        (
            "Z2xZ2 (00,01)".into(),
            GradingSpec::new(klein(), vec![pair(0, 0), pair(0, 1)]).unwrap(),
        ),
    ]
}

/// Gradings with repeated tuple entries.
pub fn repeated_suite() -> Vec<(String, GradingSpec)> {
    vec![
        ("Z2 (0,0,1)".into(), cyclic_spec(2, &[0, 0, 1])),
        ("Z3 (1,1,1)".into(), cyclic_spec(3, &[1, 1, 1])),
        ("Z4 (0,1,1,3)".into(), cyclic_spec(4, &[0, 1, 1, 3])),
        (
            "S3 (e,s,s)".into(),
            GradingSpec::new(
                s3_group(),
                vec![
                    GroupElement::Label(0),
                    GroupElement::Label(3),
                    GroupElement::Label(3),
                ],
            )
            .unwrap(),
        ),
    ]
}
