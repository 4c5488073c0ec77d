//! Linear inequality systems `Ax >= b` with exact rational entries.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::point::{serialize_int, Int, Point, Rational};

/// Syntactic class of a row, from strongest to weakest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemClass {
    /// One nonzero coefficient, equal to `±1`.
    Svpi,
    /// Coefficients in `{-1,0,1}` with at most one `+1` and at most one `-1`.
    Dc,
    /// Coefficients in `{-1,0,1}` with at most two nonzeros.
    Utvpi,
    /// At most two nonzero coefficients.
    Tvpi,
    General,
}

impl SystemClass {
    pub const REPRESENTABLE: [SystemClass; 4] = [SystemClass::Svpi, SystemClass::Dc, SystemClass::Utvpi, SystemClass::Tvpi];

    pub fn name(self) -> &'static str {
        match self {
            SystemClass::Svpi => "SVPI",
            SystemClass::Dc => "DC",
            SystemClass::Utvpi => "UTVPI",
            SystemClass::Tvpi => "TVPI",
            SystemClass::General => "GENERAL",
        }
    }

    /// Whether a coefficient row is admissible for this class.
    pub fn admits(self, coeffs: &[Rational]) -> bool {
        let nonzero = coeffs.iter().filter(|c| !c.is_zero()).count();
        let unit = coeffs.iter().all(|c| c.is_zero() || c.abs().is_one());
        let plus = coeffs.iter().filter(|c| c.is_one()).count();
        let minus = coeffs.iter().filter(|c| (-*c).is_one()).count();
        match self {
            SystemClass::Svpi => unit && nonzero <= 1,
            SystemClass::Dc => unit && plus <= 1 && minus <= 1,
            SystemClass::Utvpi => unit && nonzero <= 2,
            SystemClass::Tvpi => nonzero <= 2,
            SystemClass::General => true,
        }
    }
}

impl fmt::Display for SystemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SVPI" => Ok(SystemClass::Svpi),
            "DC" => Ok(SystemClass::Dc),
            "UTVPI" => Ok(SystemClass::Utvpi),
            "TVPI" => Ok(SystemClass::Tvpi),
            "GENERAL" => Ok(SystemClass::General),
            _ => Err(Error::Parse(format!("unknown system class `{s}`"))),
        }
    }
}

impl Serialize for SystemClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One row `coeffs · x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub class: SystemClass,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational, class: SystemClass) -> Self {
        Inequality { coeffs, rhs, class }
    }

    pub fn from_ints(coeffs: &[i64], rhs: i64, class: SystemClass) -> Self {
        Inequality {
            coeffs: coeffs.iter().map(|&c| Rational::from_integer(Int::from(c))).collect(),
            rhs: Rational::from_integer(Int::from(rhs)),
            class,
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k).collect()
    }

    pub fn lhs(&self, x: &Point) -> Rational {
        self.coeffs
            .iter()
            .zip(x.coords())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| c * Rational::from_integer(v.clone()))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn is_satisfied_by(&self, x: &Point) -> bool {
        self.lhs(x) >= self.rhs
    }
}

/// Whether the row's coefficients satisfy its own class tag.
pub fn validate_class(ineq: &Inequality) -> bool {
    ineq.class.admits(&ineq.coeffs)
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if wrote {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            let sep = if wrote { " " } else { "" };
            let spacer = if wrote { " " } else { "" };
            if mag.is_one() {
                write!(f, "{sep}{sign}{spacer}x{}", k + 1)?;
            } else {
                write!(f, "{sep}{sign}{spacer}{mag}x{}", k + 1)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " >= {}", self.rhs)
    }
}

pub(crate) fn serialize_rational<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_integer() {
        serialize_int(&v.to_integer(), s)
    } else {
        s.serialize_str(&format!("{}/{}", v.numer(), v.denom()))
    }
}

struct RationalRef<'a>(&'a Rational);

impl Serialize for RationalRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rational(self.0, s)
    }
}

impl Serialize for Inequality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Inequality", 3)?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(RationalRef).collect::<Vec<_>>())?;
        st.serialize_field("rhs", &RationalRef(&self.rhs))?;
        st.serialize_field("class", &self.class)?;
        st.end()
    }
}

/// A finite conjunction of rows over `dim` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSystem {
    dim: usize,
    rows: Vec<Inequality>,
}

impl LinearSystem {
    pub fn new(dim: usize, rows: Vec<Inequality>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch { row, expected: dim, found: r.dim() });
            }
        }
        Ok(LinearSystem { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Inequality] {
        &self.rows
    }

    /// The weakest tag among the rows; an empty system is SVPI.
    pub fn class(&self) -> SystemClass {
        self.rows.iter().map(|r| r.class).max().unwrap_or(SystemClass::Svpi)
    }

    /// Whether every row satisfies its own tag.
    pub fn is_well_tagged(&self) -> bool {
        self.rows.iter().all(validate_class)
    }

    pub fn is_satisfied_by(&self, x: &Point) -> bool {
        self.rows.iter().all(|r| r.is_satisfied_by(x))
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
            let d: Int = d.trim().parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("`{s}`: zero denominator")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?),
    };
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(coeffs: &[i64], class: SystemClass) -> Inequality {
        Inequality::from_ints(coeffs, 0, class)
    }

    #[test]
    fn class_tags() {
        assert!(validate_class(&row(&[1, -1, 0], SystemClass::Dc)));
        assert!(!validate_class(&row(&[1, 1, 0], SystemClass::Dc)));
        assert!(validate_class(&row(&[1, 1, 0], SystemClass::Utvpi)));
        assert!(validate_class(&row(&[2, 0, -1], SystemClass::Tvpi)));
        assert!(!validate_class(&row(&[2, 0, -1], SystemClass::Utvpi)));
        assert!(!validate_class(&row(&[1, 1, 1], SystemClass::Tvpi)));
        assert!(validate_class(&row(&[3, 1, 1], SystemClass::General)));
        assert!(validate_class(&row(&[0, -1, 0], SystemClass::Svpi)));
        assert!(!validate_class(&row(&[1, -1, 0], SystemClass::Svpi)));
    }

    #[test]
    fn stronger_tags_imply_weaker() {
        let mut coeffs = vec![0i64; 3];
        // every row over {-2..2}^3
        for code in 0..125 {
            let mut c = code;
            for slot in coeffs.iter_mut() {
                *slot = c % 5 - 2;
                c /= 5;
            }
            let r: Vec<Rational> = coeffs.iter().map(|&v| Rational::from_integer(Int::from(v))).collect();
            let classes = [SystemClass::Svpi, SystemClass::Dc, SystemClass::Utvpi, SystemClass::Tvpi, SystemClass::General];
            for (k, strong) in classes.iter().enumerate() {
                if strong.admits(&r) {
                    for weak in &classes[k..] {
                        assert!(weak.admits(&r), "{coeffs:?} admitted by {strong} but not {weak}");
                    }
                }
            }
        }
    }

    #[test]
    fn system_class_is_weakest_row() {
        let sys = LinearSystem::new(2, vec![row(&[1, 0], SystemClass::Svpi), row(&[1, 2], SystemClass::Tvpi)]).unwrap();
        assert_eq!(sys.class(), SystemClass::Tvpi);
        assert_eq!(LinearSystem::new(2, vec![]).unwrap().class(), SystemClass::Svpi);
        assert!(LinearSystem::new(3, vec![row(&[1, 0], SystemClass::Svpi)]).is_err());
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(Int::from(3), Int::from(2)));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from_integer(Int::from(-3)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display() {
        let r = Inequality::from_ints(&[-2, -2, 3], 0, SystemClass::General);
        assert_eq!(r.to_string(), "-2x1 - 2x2 + 3x3 >= 0");
        let r = Inequality::from_ints(&[1, 0, -1], 4, SystemClass::Dc);
        assert_eq!(r.to_string(), "x1 - x3 >= 4");
    }
}
