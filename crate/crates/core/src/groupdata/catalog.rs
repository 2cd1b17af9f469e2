//! Fundamental degrees, bad primes and torsion primes of split reductive groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
    SO,
    O,
    Sp,
    GL,
    Spin,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::SO,
        Family::O,
        Family::Sp,
        Family::GL,
        Family::Spin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::SO => "SO",
            Family::O => "O",
            Family::Sp => "Sp",
            Family::GL => "GL",
            Family::Spin => "Spin",
        }
    }

    /// Families indexed by a matrix size rather than by the Lie rank.
    pub fn is_matrix_group(self) -> bool {
        matches!(self, Family::SO | Family::O | Family::Sp | Family::GL | Family::Spin)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8)
    }

    fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown group family '{s}'")))
    }
}

/// Irreducible root system types, used for Weyl group enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl CartanType {
    pub fn rank(self) -> u32 {
        match self {
            CartanType::A(l) | CartanType::B(l) | CartanType::C(l) | CartanType::D(l) => l,
            CartanType::G2 => 2,
            CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
        }
    }

    pub fn degrees(self) -> Vec<u32> {
        let mut d = match self {
            CartanType::A(l) => (2..=l + 1).collect(),
            CartanType::B(l) | CartanType::C(l) => (1..=l).map(|i| 2 * i).collect(),
            CartanType::D(l) => {
                let mut v: Vec<u32> = (1..l).map(|i| 2 * i).collect();
                v.push(l);
                v
            }
            CartanType::G2 => vec![2, 6],
            CartanType::F4 => vec![2, 6, 8, 12],
            CartanType::E6 => vec![2, 5, 6, 8, 9, 12],
            CartanType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            CartanType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        };
        d.sort_unstable();
        d
    }

    pub fn bad_primes(self) -> BTreeSet<u64> {
        let v: &[u64] = match self {
            CartanType::A(_) => &[],
            CartanType::B(l) | CartanType::C(l) if l < 2 => &[],
            CartanType::D(l) if l < 4 => &[],
            CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => &[2],
            CartanType::G2 | CartanType::F4 | CartanType::E6 | CartanType::E7 => &[2, 3],
            CartanType::E8 => &[2, 3, 5],
        };
        v.iter().copied().collect()
    }

    /// Torsion primes of the simply connected group of this type.
    pub fn torsion_primes(self) -> BTreeSet<u64> {
        let v: &[u64] = match self {
            CartanType::A(_) | CartanType::C(_) => &[],
            CartanType::B(l) if l < 3 => &[],
            CartanType::D(l) if l < 4 => &[],
            CartanType::B(_) | CartanType::D(_) | CartanType::G2 => &[2],
            CartanType::F4 | CartanType::E6 | CartanType::E7 => &[2, 3],
            CartanType::E8 => &[2, 3, 5],
        };
        v.iter().copied().collect()
    }

    /// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` in Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank() as usize;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            CartanType::D(_) => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                if n >= 3 {
                    link(n - 3, n - 1);
                }
            }
            CartanType::G2 => link(0, 1),
            CartanType::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::E6 | CartanType::E7 | CartanType::E8 => {
                // 1-3-4-5-6-(7-8), with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
        }
        match self {
            CartanType::B(l) if l >= 2 => a[n - 1][n - 2] = -2,
            CartanType::C(l) if l >= 2 => a[n - 2][n - 1] = -2,
            CartanType::F4 => a[2][1] = -2,
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

/// A split reductive group from the catalog.
///
/// For the Cartan families and the exceptional groups, `n` is the Lie rank;
/// for SO, O, Sp, GL and Spin it is the size of the defining matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32) -> Result<GroupSpec> {
        let ok = match family {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::SO => n >= 2,
            Family::O | Family::GL => n >= 1,
            Family::Sp => n >= 2 && n.is_multiple_of(2),
            Family::Spin => n >= 3,
            f => Some(n) == f.fixed_rank(),
        };
        if !ok {
            return Err(Error::InvalidArgument(format!("{family}({n}) is not in the catalog")));
        }
        Ok(GroupSpec { family, n })
    }

    /// Exceptional groups need no parameter.
    pub fn exceptional(family: Family) -> Result<GroupSpec> {
        let n = family
            .fixed_rank()
            .ok_or_else(|| Error::InvalidArgument(format!("{family} needs a rank")))?;
        GroupSpec::new(family, n)
    }

    /// Parses names like `B3`, `E8`, `SO(7)`, `Spin11`, `Sp(6)`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '_').collect();
        if let Ok(f) = t.parse::<Family>() {
            if f.is_exceptional() {
                return GroupSpec::exceptional(f);
            }
        }
        let split = t.find(|c: char| c.is_ascii_digit()).unwrap_or(t.len());
        let (head, tail) = t.split_at(split);
        let family: Family = head.parse()?;
        let n: u32 = tail
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("cannot read a group from '{s}'")))?;
        GroupSpec::new(family, n)
    }

    /// Lie rank (dimension of a maximal torus).
    pub fn rank(&self) -> u32 {
        match self.family {
            Family::SO | Family::O | Family::Spin | Family::Sp => self.n / 2,
            Family::GL => self.n,
            _ => self.n,
        }
    }

    /// Irreducible components of the root system (empty for a torus).
    pub fn root_components(&self) -> Vec<CartanType> {
        let n = self.n;
        match self.family {
            Family::A => vec![CartanType::A(n)],
            Family::B => vec![CartanType::B(n)],
            Family::C => vec![CartanType::C(n)],
            // D_3 = A_3
            Family::D if n == 3 => vec![CartanType::A(3)],
            Family::D => vec![CartanType::D(n)],
            Family::G2 => vec![CartanType::G2],
            Family::F4 => vec![CartanType::F4],
            Family::E6 => vec![CartanType::E6],
            Family::E7 => vec![CartanType::E7],
            Family::E8 => vec![CartanType::E8],
            Family::GL if n == 1 => vec![],
            Family::GL => vec![CartanType::A(n - 1)],
            Family::Sp if n == 2 => vec![CartanType::A(1)],
            Family::Sp => vec![CartanType::C(n / 2)],
            Family::SO | Family::Spin | Family::O => match n {
                1 | 2 => vec![],
                3 => vec![CartanType::A(1)],
                4 => vec![CartanType::A(1), CartanType::A(1)],
                6 => vec![CartanType::A(3)],
                _ if n % 2 == 1 => vec![CartanType::B(n / 2)],
                _ => vec![CartanType::D(n / 2)],
            },
        }
    }

    /// Components of the Weyl group as a reflection group. For O(n) this is
    /// the group of signed permutations of the torus coordinates.
    pub fn weyl_components(&self) -> Vec<CartanType> {
        match (self.family, self.rank()) {
            (Family::O, 0) => vec![],
            (Family::O, 1) => vec![CartanType::A(1)],
            (Family::O, r) => vec![CartanType::B(r)],
            _ => self.root_components(),
        }
    }

    pub fn is_simply_connected(&self) -> bool {
        matches!(
            self.family,
            Family::A
                | Family::B
                | Family::C
                | Family::D
                | Family::G2
                | Family::F4
                | Family::E6
                | Family::E7
                | Family::E8
                | Family::Sp
                | Family::Spin
        )
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_exceptional() {
            write!(f, "{}", self.family)
        } else if self.family.is_matrix_group() {
            write!(f, "{}({})", self.family, self.n)
        } else {
            write!(f, "{}{}", self.family, self.n)
        }
    }
}

/// Sorted list of fundamental degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeList(pub Vec<u32>);

impl DegreeList {
    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn product(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }
}

impl fmt::Display for DegreeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

pub fn fundamental_degrees(g: &GroupSpec) -> DegreeList {
    let mut d: Vec<u32> = match g.family {
        Family::GL => (1..=g.n).collect(),
        Family::SO | Family::Spin if g.n.is_multiple_of(2) => {
            let r = g.n / 2;
            let mut v: Vec<u32> = (1..r).map(|i| 2 * i).collect();
            v.push(r);
            v
        }
        Family::SO | Family::Spin | Family::O | Family::Sp => (1..=g.rank()).map(|i| 2 * i).collect(),
        _ => g.root_components().iter().flat_map(|c| c.degrees()).collect(),
    };
    d.sort_unstable();
    DegreeList(d)
}

/// Primes that are not good for `g`.
pub fn good_primes_excluded(g: &GroupSpec) -> BTreeSet<u64> {
    g.root_components().iter().flat_map(|c| c.bad_primes()).collect()
}

/// Primes `p` for which the integral cohomology of the classifying space has `p`-torsion.
pub fn torsion_primes(g: &GroupSpec) -> BTreeSet<u64> {
    match g.family {
        Family::GL | Family::Sp => BTreeSet::new(),
        // the orthogonal groups carry 2-torsion as soon as they are nonabelian,
        // and O(n) always, through its component group
        Family::SO if g.n >= 3 => BTreeSet::from([2]),
        Family::SO => BTreeSet::new(),
        Family::O => BTreeSet::from([2]),
        _ => g.root_components().iter().flat_map(|c| c.torsion_primes()).collect(),
    }
}

/// Every simply connected group in the catalog up to the given Lie rank.
pub fn simply_connected_catalog(max_rank: u32) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for l in 1..=max_rank {
        out.push(GroupSpec { family: Family::A, n: l });
        if l >= 2 {
            out.push(GroupSpec { family: Family::B, n: l });
            out.push(GroupSpec { family: Family::C, n: l });
            out.push(GroupSpec { family: Family::Sp, n: 2 * l });
        }
        if l >= 3 {
            out.push(GroupSpec { family: Family::D, n: l });
        }
    }
    for n in 3..=2 * max_rank + 1 {
        out.push(GroupSpec { family: Family::Spin, n });
    }
    for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
        if f.fixed_rank().unwrap() <= max_rank {
            out.push(GroupSpec { family: f, n: f.fixed_rank().unwrap() });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        GroupSpec::parse(s).unwrap()
    }

    #[test]
    fn degree_table() {
        assert_eq!(fundamental_degrees(&g("B3")).0, [2, 4, 6]);
        assert_eq!(fundamental_degrees(&g("E8")).0, [2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(fundamental_degrees(&g("A1")).0, [2]);
        assert_eq!(fundamental_degrees(&g("D4")).0, [2, 4, 4, 6]);
        assert_eq!(fundamental_degrees(&g("SO(8)")).0, [2, 4, 4, 6]);
        assert_eq!(fundamental_degrees(&g("GL(3)")).0, [1, 2, 3]);
        assert_eq!(fundamental_degrees(&g("Sp(6)")), fundamental_degrees(&g("SO(7)")));
        assert_eq!(fundamental_degrees(&g("D3")), fundamental_degrees(&g("A3")));
    }

    #[test]
    fn prime_data() {
        assert!(good_primes_excluded(&g("A5")).is_empty());
        assert_eq!(good_primes_excluded(&g("G2")), BTreeSet::from([2, 3]));
        assert_eq!(good_primes_excluded(&g("E8")), BTreeSet::from([2, 3, 5]));
        assert!(torsion_primes(&g("Sp(8)")).is_empty());
        assert_eq!(torsion_primes(&g("G2")), BTreeSet::from([2]));
        assert_eq!(torsion_primes(&g("Spin(11)")), BTreeSet::from([2]));
        assert!(torsion_primes(&g("Spin(6)")).is_empty());
    }

    #[test]
    fn torsion_primes_are_bad_for_simply_connected_groups() {
        for spec in simply_connected_catalog(8) {
            assert!(torsion_primes(&spec).is_subset(&good_primes_excluded(&spec)), "{spec}");
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(g("Spin(11)").to_string(), "Spin(11)");
        assert_eq!(g("e7").to_string(), "E7");
        assert_eq!(g("SO 7").rank(), 3);
        assert!(GroupSpec::parse("D2").is_err());
        assert!(GroupSpec::parse("Sp(5)").is_err());
        assert!(GroupSpec::new(Family::E6, 5).is_err());
    }

    #[test]
    fn degrees_have_rank_many_entries() {
        for spec in simply_connected_catalog(8) {
            assert_eq!(fundamental_degrees(&spec).0.len() as u32, spec.rank(), "{spec}");
        }
    }
}
