//! The polynomials P and Q of the SL(3,ℂ) trace identity for F₂.
//!
//! Q is transcribed twice: once as the printed display string and once as an
//! explicit monomial table. Tests evaluate both at random integer points.

use crate::ring::Ring;
use crate::LawtonError;

/// Variable order of every exponent vector.
pub const VARIABLES: [char; 8] = ['x', 'y', 'z', 'u', 'v', 'w', 'r', 's'];

pub const P_DISPLAY: &str = "xuyv-uyr-xvs-uvz-xyw+rs+xu+yv+zw-3";

pub const Q_DISPLAY: &str = "vu^2x^2y+uv^2y^2x-ryxu^2-uxvrw-ry^2vu+rx^2v^2-rzyxv+su^2y^2-swvuy-svux^2\
    -uxysz-sv^2yx-u^3vy+u^2v^2w-zu^2xv-uv^3x-zv^2yu-wx^2uy-uy^3x-wy^2vx\
    -x^3vy+x^2y^2z+uwr^2-2r^2xv+r^2zy+surx+svry+wszr+rzu^2+ruv^2+rvz^2\
    +xrw^2+rwy^2+x^2yr-2s^2uy+s^2wv+xzs^2+u^2vs+usz^2+szv^2+syw^2+swx^2\
    +sxy^2+u^2wy-2w^2vu+xuyv+wuzx+uy^2z+xv^2w+wvzy+x^2zv-2z^2yx\
    +r^3+3uyr-3rvw-3rzx+s^3-3swu+3xvs-3syz+u^3+3uvz+v^3+w^3\
    +3xyw+x^3+y^3+z^3-6rs-6xu-6yv-6zw+9";

/// Exponents over (x, y, z, u, v, w, r, s).
pub type Exponents = [u8; 8];

pub const P_TERMS: [(i64, Exponents); 10] = [
    (1, [1, 1, 0, 1, 1, 0, 0, 0]),
    (-1, [0, 1, 0, 1, 0, 0, 1, 0]),
    (-1, [1, 0, 0, 0, 1, 0, 0, 1]),
    (-1, [0, 0, 1, 1, 1, 0, 0, 0]),
    (-1, [1, 1, 0, 0, 0, 1, 0, 0]),
    (1, [0, 0, 0, 0, 0, 0, 1, 1]),
    (1, [1, 0, 0, 1, 0, 0, 0, 0]),
    (1, [0, 1, 0, 0, 1, 0, 0, 0]),
    (1, [0, 0, 1, 0, 0, 1, 0, 0]),
    (-3, [0, 0, 0, 0, 0, 0, 0, 0]),
];

pub const Q_TERMS: [(i64, Exponents); 73] = [
    (1, [2, 1, 0, 2, 1, 0, 0, 0]),
    (1, [1, 2, 0, 1, 2, 0, 0, 0]),
    (-1, [1, 1, 0, 2, 0, 0, 1, 0]),
    (-1, [1, 0, 0, 1, 1, 1, 1, 0]),
    (-1, [0, 2, 0, 1, 1, 0, 1, 0]),
    (1, [2, 0, 0, 0, 2, 0, 1, 0]),
    (-1, [1, 1, 1, 0, 1, 0, 1, 0]),
    (1, [0, 2, 0, 2, 0, 0, 0, 1]),
    (-1, [0, 1, 0, 1, 1, 1, 0, 1]),
    (-1, [2, 0, 0, 1, 1, 0, 0, 1]),
    (-1, [1, 1, 1, 1, 0, 0, 0, 1]),
    (-1, [1, 1, 0, 0, 2, 0, 0, 1]),
    (-1, [0, 1, 0, 3, 1, 0, 0, 0]),
    (1, [0, 0, 0, 2, 2, 1, 0, 0]),
    (-1, [1, 0, 1, 2, 1, 0, 0, 0]),
    (-1, [1, 0, 0, 1, 3, 0, 0, 0]),
    (-1, [0, 1, 1, 1, 2, 0, 0, 0]),
    (-1, [2, 1, 0, 1, 0, 1, 0, 0]),
    (-1, [1, 3, 0, 1, 0, 0, 0, 0]),
    (-1, [1, 2, 0, 0, 1, 1, 0, 0]),
    (-1, [3, 1, 0, 0, 1, 0, 0, 0]),
    (1, [2, 2, 1, 0, 0, 0, 0, 0]),
    (1, [0, 0, 0, 1, 0, 1, 2, 0]),
    (-2, [1, 0, 0, 0, 1, 0, 2, 0]),
    (1, [0, 1, 1, 0, 0, 0, 2, 0]),
    (1, [1, 0, 0, 1, 0, 0, 1, 1]),
    (1, [0, 1, 0, 0, 1, 0, 1, 1]),
    (1, [0, 0, 1, 0, 0, 1, 1, 1]),
    (1, [0, 0, 1, 2, 0, 0, 1, 0]),
    (1, [0, 0, 0, 1, 2, 0, 1, 0]),
    (1, [0, 0, 2, 0, 1, 0, 1, 0]),
    (1, [1, 0, 0, 0, 0, 2, 1, 0]),
    (1, [0, 2, 0, 0, 0, 1, 1, 0]),
    (1, [2, 1, 0, 0, 0, 0, 1, 0]),
    (-2, [0, 1, 0, 1, 0, 0, 0, 2]),
    (1, [0, 0, 0, 0, 1, 1, 0, 2]),
    (1, [1, 0, 1, 0, 0, 0, 0, 2]),
    (1, [0, 0, 0, 2, 1, 0, 0, 1]),
    (1, [0, 0, 2, 1, 0, 0, 0, 1]),
    (1, [0, 0, 1, 0, 2, 0, 0, 1]),
    (1, [0, 1, 0, 0, 0, 2, 0, 1]),
    (1, [2, 0, 0, 0, 0, 1, 0, 1]),
    (1, [1, 2, 0, 0, 0, 0, 0, 1]),
    (1, [0, 1, 0, 2, 0, 1, 0, 0]),
    (-2, [0, 0, 0, 1, 1, 2, 0, 0]),
    (1, [1, 1, 0, 1, 1, 0, 0, 0]),
    (1, [1, 0, 1, 1, 0, 1, 0, 0]),
    (1, [0, 2, 1, 1, 0, 0, 0, 0]),
    (1, [1, 0, 0, 0, 2, 1, 0, 0]),
    (1, [0, 1, 1, 0, 1, 1, 0, 0]),
    (1, [2, 0, 1, 0, 1, 0, 0, 0]),
    (-2, [1, 1, 2, 0, 0, 0, 0, 0]),
    (1, [0, 0, 0, 0, 0, 0, 3, 0]),
    (3, [0, 1, 0, 1, 0, 0, 1, 0]),
    (-3, [0, 0, 0, 0, 1, 1, 1, 0]),
    (-3, [1, 0, 1, 0, 0, 0, 1, 0]),
    (1, [0, 0, 0, 0, 0, 0, 0, 3]),
    (-3, [0, 0, 0, 1, 0, 1, 0, 1]),
    (3, [1, 0, 0, 0, 1, 0, 0, 1]),
    (-3, [0, 1, 1, 0, 0, 0, 0, 1]),
    (1, [0, 0, 0, 3, 0, 0, 0, 0]),
    (3, [0, 0, 1, 1, 1, 0, 0, 0]),
    (1, [0, 0, 0, 0, 3, 0, 0, 0]),
    (1, [0, 0, 0, 0, 0, 3, 0, 0]),
    (3, [1, 1, 0, 0, 0, 1, 0, 0]),
    (1, [3, 0, 0, 0, 0, 0, 0, 0]),
    (1, [0, 3, 0, 0, 0, 0, 0, 0]),
    (1, [0, 0, 3, 0, 0, 0, 0, 0]),
    (-6, [0, 0, 0, 0, 0, 0, 1, 1]),
    (-6, [1, 0, 0, 1, 0, 0, 0, 0]),
    (-6, [0, 1, 0, 0, 1, 0, 0, 0]),
    (-6, [0, 0, 1, 0, 0, 1, 0, 0]),
    (9, [0, 0, 0, 0, 0, 0, 0, 0]),
];

/// Sparse integer polynomial in the eight trace variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(i64, Exponents)>,
}

impl Polynomial {
    /// Combines like terms and drops zeros; terms are sorted by exponent.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Exponents)>) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for (c, e) in terms {
            *map.entry(e).or_insert(0i64) += c;
        }
        Self { terms: map.into_iter().filter(|&(_, c)| c != 0).map(|(e, c)| (c, e)).collect() }
    }

    pub fn terms(&self) -> &[(i64, Exponents)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, e)| e.iter().map(|&d| u32::from(d)).sum()).max().unwrap_or(0)
    }

    pub fn eval<T: Ring>(&self, vals: &[T; 8]) -> T {
        let max = self.terms.iter().flat_map(|(_, e)| e.iter()).copied().max().unwrap_or(0) as usize;
        let powers: Vec<Vec<T>> = vals
            .iter()
            .map(|v| {
                let mut p = vec![T::one()];
                for i in 0..max {
                    p.push(p[i].clone() * v.clone());
                }
                p
            })
            .collect();
        self.terms.iter().fold(T::zero(), |acc, (c, e)| {
            let mono = e.iter().enumerate().fold(T::from_int(*c), |m, (i, &d)| m * powers[i][d as usize].clone());
            acc + mono
        })
    }
}

/// Parses the compact display syntax: signed terms made of an optional integer
/// coefficient followed by single-letter variables with optional `^k`.
/// Whitespace and `*` are ignored.
pub fn parse_polynomial(src: &str) -> Result<Polynomial, LawtonError> {
    let chars: Vec<(usize, char)> = src.char_indices().filter(|(_, c)| !c.is_whitespace() && *c != '*').collect();
    let err = |i: usize, msg: &str| LawtonError::Parse {
        offset: chars.get(i).map_or(src.len(), |c| c.0),
        message: msg.to_string(),
    };
    let mut terms = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        match chars[i].1 {
            '+' => i += 1,
            '-' => {
                sign = -1;
                i += 1
            }
            _ if i > 0 => return Err(err(i, "expected '+' or '-'")),
            _ => {}
        }
        let start = i;
        let mut coeff = 0i64;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            coeff = coeff * 10 + i64::from(chars[i].1.to_digit(10).expect("digit"));
            i += 1;
        }
        if i == start {
            coeff = 1;
        }
        let mut e = [0u8; 8];
        while i < chars.len() {
            let Some(var) = VARIABLES.iter().position(|&v| v == chars[i].1) else { break };
            i += 1;
            let mut pow = 1u8;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let s = i;
                let mut p = 0u8;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    p = p * 10 + chars[i].1.to_digit(10).expect("digit") as u8;
                    i += 1;
                }
                if i == s {
                    return Err(err(i, "expected exponent"));
                }
                pow = p;
            }
            e[var] += pow;
        }
        if i == start {
            return Err(err(i, "expected a term"));
        }
        terms.push((sign * coeff, e));
    }
    Ok(Polynomial::from_terms(terms))
}

pub fn p_polynomial() -> Polynomial {
    Polynomial::from_terms(P_TERMS)
}

pub fn q_polynomial() -> Polynomial {
    Polynomial::from_terms(Q_TERMS)
}
