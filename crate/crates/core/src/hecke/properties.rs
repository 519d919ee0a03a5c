//! Checks of the properties P1-P11, P13 and P14 on computed data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

use super::{AsymptoticData, CellPartition, KLTable, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Property {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P13,
    P14,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::P1,
        Property::P2,
        Property::P3,
        Property::P4,
        Property::P5,
        Property::P6,
        Property::P7,
        Property::P8,
        Property::P9,
        Property::P10,
        Property::P11,
        Property::P13,
        Property::P14,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .iter()
            .copied()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown property {:?}", s)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    pub passed: bool,
    /// Number of instances examined.
    pub checked: usize,
    pub witness: Option<String>,
}

/// Everything the checks need, computed once.
pub struct PropertyContext<'a> {
    pub table: &'a KLTable,
    pub data: &'a AsymptoticData,
    pub left: CellPartition,
    pub right: CellPartition,
    pub two_sided: CellPartition,
}

impl<'a> PropertyContext<'a> {
    pub fn new(table: &'a KLTable, data: &'a AsymptoticData) -> Self {
        PropertyContext {
            table,
            data,
            left: CellPartition::compute(table, Side::Left),
            right: CellPartition::compute(table, Side::Right),
            two_sided: CellPartition::compute(table, Side::TwoSided),
        }
    }

    fn w(&self, x: usize) -> String {
        self.table.group.element(x).to_string()
    }

    pub fn check(&self, p: Property) -> PropertyResult {
        let g = &self.table.group;
        let d = self.data;
        let n = g.len();
        let inv = &g.inverse;
        let mut checked = 0;
        let mut witness = None;
        let mut fail = |w: String| {
            if witness.is_none() {
                witness = Some(w);
            }
        };
        match p {
            Property::P1 => {
                for z in 0..n {
                    checked += 1;
                    if d.a_val[z] > d.delta[z] {
                        fail(format!("a({})={} > Delta={}", self.w(z), d.a_val[z], d.delta[z]));
                    }
                }
            }
            Property::P2 => {
                for &(x, y, z) in d.gamma.keys() {
                    if d.duflo.contains(&(z as usize)) {
                        checked += 1;
                        if x as usize != inv[y as usize] {
                            fail(format!(
                                "gamma({},{},{}) != 0",
                                self.w(x as usize),
                                self.w(y as usize),
                                self.w(z as usize)
                            ));
                        }
                    }
                }
            }
            Property::P3 => {
                for y in 0..n {
                    checked += 1;
                    let k = d
                        .duflo
                        .iter()
                        .filter(|&&e| d.gamma(inv[y], y, e) != 0)
                        .count();
                    if k != 1 {
                        fail(format!("{} elements of D for y={}", k, self.w(y)));
                    }
                }
            }
            Property::P4 => {
                for z in 0..n {
                    for z1 in 0..n {
                        if self.two_sided.leq(z1, z) {
                            checked += 1;
                            if d.a_val[z1] < d.a_val[z] {
                                fail(format!("{} <=LR {} but a drops", self.w(z1), self.w(z)));
                            }
                        }
                    }
                }
            }
            Property::P5 => {
                for &e in &d.duflo {
                    for y in 0..n {
                        let c = d.gamma(inv[y], y, e);
                        if c != 0 {
                            checked += 1;
                            if c != d.n_z[e] || c.abs() != 1 {
                                fail(format!(
                                    "gamma(y^-1,y,{})={} with n_d={} for y={}",
                                    self.w(e),
                                    c,
                                    d.n_z[e],
                                    self.w(y)
                                ));
                            }
                        }
                    }
                }
            }
            Property::P6 => {
                for &e in &d.duflo {
                    checked += 1;
                    if inv[e] != e {
                        fail(format!("{} in D is not an involution", self.w(e)));
                    }
                }
            }
            Property::P7 => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let c = d.gamma(x, y, z);
                            let c2 = d.gamma(y, z, x);
                            if c != 0 || c2 != 0 {
                                checked += 1;
                                if c != c2 {
                                    fail(format!(
                                        "gamma({},{},{})={} but rotated {}",
                                        self.w(x),
                                        self.w(y),
                                        self.w(z),
                                        c,
                                        c2
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            Property::P8 => {
                for &(x, y, z) in d.gamma.keys() {
                    let (x, y, z) = (x as usize, y as usize, z as usize);
                    checked += 1;
                    if !(self.left.same(x, inv[y])
                        && self.left.same(y, inv[z])
                        && self.left.same(z, inv[x]))
                    {
                        fail(format!(
                            "gamma({},{},{}) != 0 across left cells",
                            self.w(x),
                            self.w(y),
                            self.w(z)
                        ));
                    }
                }
            }
            Property::P9 | Property::P10 | Property::P11 => {
                let c = match p {
                    Property::P9 => &self.left,
                    Property::P10 => &self.right,
                    _ => &self.two_sided,
                };
                for z in 0..n {
                    for z1 in 0..n {
                        if c.leq(z1, z) && d.a_val[z1] == d.a_val[z] {
                            checked += 1;
                            if !c.same(z1, z) {
                                fail(format!(
                                    "{} <= {} with equal a but different cells",
                                    self.w(z1),
                                    self.w(z)
                                ));
                            }
                        }
                    }
                }
            }
            Property::P13 => {
                for m in &self.left.members {
                    checked += 1;
                    let ds: Vec<usize> =
                        m.iter().copied().filter(|x| d.duflo.contains(x)).collect();
                    if ds.len() != 1 {
                        fail(format!(
                            "left cell of {} has {} elements of D",
                            self.w(m[0]),
                            ds.len()
                        ));
                        continue;
                    }
                    for &x in m {
                        if d.gamma(inv[x], x, ds[0]) == 0 {
                            fail(format!("gamma(x^-1,x,{}) = 0 for x={}", self.w(ds[0]), self.w(x)));
                        }
                    }
                }
            }
            Property::P14 => {
                for z in 0..n {
                    checked += 1;
                    if !self.two_sided.same(z, inv[z]) {
                        fail(format!("{} not two-sided equivalent to its inverse", self.w(z)));
                    }
                }
            }
        }
        PropertyResult {
            property: p,
            passed: witness.is_none(),
            checked,
            witness,
        }
    }
}

pub fn check_properties(
    table: &KLTable,
    data: &AsymptoticData,
    props: &[Property],
) -> Vec<PropertyResult> {
    let ctx = PropertyContext::new(table, data);
    props.iter().map(|&p| ctx.check(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::WeightFunction;

    fn all_pass(n: usize, a: u32, b: u32) {
        let t = KLTable::compute(n, WeightFunction::new(a, b).unwrap(), 5).unwrap();
        let (d, _) = AsymptoticData::compute(&t, 3).unwrap();
        for r in check_properties(&t, &d, &Property::ALL) {
            assert!(r.passed, "{} failed for n={} a={} b={}: {:?}", r.property, n, a, b, r.witness);
        }
    }

    #[test]
    fn rank_one() {
        for (a, b) in [(1, 1), (1, 2), (3, 1)] {
            all_pass(1, a, b);
        }
    }

    #[test]
    fn rank_two_known_cases() {
        all_pass(2, 1, 1);
        all_pass(2, 1, 3);
    }

    #[test]
    fn parse() {
        assert_eq!("p13".parse::<Property>().unwrap(), Property::P13);
        assert!("P12".parse::<Property>().is_err());
    }
}
