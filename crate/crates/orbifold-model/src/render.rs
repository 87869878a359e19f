use crate::OrbifoldSignature;
use std::fmt;

fn list(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for OrbifoldSignature {
    /// Shortest DSL form that parses back to `self`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = self;
        let planar = o.underlying_orientable && o.underlying_genus == 0;
        let no_mirrors = !o.has_mirrors();
        let h = o.underlying_boundary_circles;

        if o.underlying_orientable && h == 0 && no_mirrors {
            return match (o.underlying_genus, o.cones.is_empty()) {
                (0, _) => write!(f, "S2({})", list(&o.cones)),
                (1, true) => write!(f, "T2"),
                (g, true) => write!(f, "Sg(g={g})"),
                (g, false) => write!(f, "Sg(g={g})({})", list(&o.cones)),
            };
        }
        if !o.underlying_orientable && h == 0 && no_mirrors {
            write!(f, "Ng(g={})", o.underlying_genus)?;
            if !o.cones.is_empty() {
                write!(f, "({})", list(&o.cones))?;
            }
            return Ok(());
        }
        if planar && h > 0 && o.boundary_circles == h && no_mirrors && !o.cones.is_empty() {
            return match h {
                1 => write!(f, "D2({})", list(&o.cones)),
                c => write!(f, "D2({};c={c})", list(&o.cones)),
            };
        }
        if planar && h == 1 && o.boundary_circles == 0 {
            if o.full_mirror_circles == 1 && o.mirror_intervals == 0 {
                if o.cones.is_empty() && !o.corners.is_empty() {
                    return match o.corners.len() {
                        3 => write!(f, "T({})", list(&o.corners)),
                        4 => write!(f, "Q({})", list(&o.corners)),
                        _ => write!(f, "P({})", list(&o.corners)),
                    };
                }
                return write!(f, "D({};{})", list(&o.cones), list(&o.corners));
            }
            if o.full_mirror_circles == 0 && o.mirror_intervals > 0 {
                return write!(f, "D({};{});b={}", list(&o.cones), list(&o.corners), o.mirror_intervals);
            }
        }

        let head = if o.underlying_orientable { "Sg" } else { "Ng" };
        write!(f, "{head}(g={}", o.underlying_genus)?;
        for (key, v) in [("h", h), ("c", o.boundary_circles), ("b", o.mirror_intervals), ("m", o.full_mirror_circles)] {
            if v > 0 {
                write!(f, ",{key}={v}")?;
            }
        }
        write!(f, ")")?;
        match (o.cones.is_empty(), o.corners.is_empty()) {
            (true, true) => Ok(()),
            (_, true) => write!(f, "({})", list(&o.cones)),
            _ => write!(f, "({};{})", list(&o.cones), list(&o.corners)),
        }
    }
}
