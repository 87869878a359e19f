use crate::{Family, LieError, LieType};

/// Parse `PSL(n)`, `PSp(2m)`, `PO(2m+1)`, `PO(2m)`, `G2`, `F4`, `E6`, `E7`, `E8`.
///
/// Case and whitespace are ignored. `PGL(n)`/`SL(n)` are read as `PSL(n)`,
/// `Sp(2m)` as `PSp(2m)` and `SO(k)` as `PO(k)`.
pub fn parse_lie_type(input: &str) -> Result<LieType, LieError> {
    let err = |reason: &str| LieError::Parse { input: input.to_string(), reason: reason.to_string() };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
    if s.is_empty() {
        return Err(err("empty input"));
    }

    let (name, arg) = match s.find('(') {
        None => (s.as_str(), None),
        Some(i) => {
            let rest = s[i + 1..].strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("parameter must be a positive integer"));
            }
            let v: u32 = rest.parse().map_err(|_| err("parameter out of range"))?;
            (&s[..i], Some(v))
        }
    };

    let exceptional = match name {
        "G2" => Some(Family::G2),
        "F4" => Some(Family::F4),
        "E6" => Some(Family::E6),
        "E7" => Some(Family::E7),
        "E8" => Some(Family::E8),
        _ => None,
    };
    if let Some(fam) = exceptional {
        if arg.is_some() {
            return Err(err("exceptional groups take no parameter"));
        }
        return LieType::exceptional(fam);
    }

    let k = arg.ok_or_else(|| err("unknown group name"))?;
    match name {
        "PSL" | "PGL" | "SL" => LieType::psl(k),
        "PSP" | "SP" => {
            if k % 2 != 0 {
                return Err(err("symplectic rank must be even"));
            }
            LieType::psp(k / 2)
        }
        "PO" | "SO" => {
            if k % 2 == 1 {
                LieType::po_odd(k / 2)
            } else {
                LieType::po_even(k / 2)
            }
        }
        _ => Err(err("unknown group name")),
    }
}
