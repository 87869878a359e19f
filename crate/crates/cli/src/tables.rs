//! Regenerates the five reference tables from the formulas.

use dimension_engine::{euclidean_char_dim, euclidean_invariant_dim, hitchin_dim};
use lie_catalog::{Family, LieType};
use orbifold_model::{parse_signature, EuclideanClass};
use serde_json::{json, Value};

pub const CLASSICAL: [Family; 4] = [Family::Psl, Family::Psp, Family::PoOdd, Family::PoEven];

/// Default parameter limits for tables 1, 3 and 4/5.
pub const DEFAULT_TABLE1_MAX: u32 = 10;
pub const DEFAULT_TABLE3_MAX: u32 = 120;
pub const DEFAULT_TABLE45_MAX: u32 = 40;

/// A table as column names and rows of JSON cells; the first column labels
/// the row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub number: u8,
    pub title: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn to_json(&self) -> Value {
        json!({
            "table": self.number,
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows,
        })
    }

    pub fn to_tsv(&self) -> String {
        let cell = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let mut out = self.columns.join("\t");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.iter().map(cell).collect::<Vec<_>>().join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Classical groups with parameter up to `max`, in family order.
pub fn classical_groups(max: u32) -> Vec<LieType> {
    CLASSICAL
        .iter()
        .flat_map(|&f| (f.min_param().unwrap_or(1)..=max).filter_map(move |p| LieType::new(f, Some(p)).ok()))
        .collect()
}

pub fn exceptional_groups() -> Vec<LieType> {
    Family::EXCEPTIONAL.iter().map(|&f| LieType::exceptional(f).expect("exceptional")).collect()
}

fn exponent_row(g: &LieType) -> Vec<Value> {
    let ex: Vec<String> = g.exponents().iter().map(|d| d.to_string()).collect();
    vec![json!(g.to_string()), json!(ex.join(",")), json!(g.rank()), json!(g.dim())]
}

fn exponent_columns() -> Vec<String> {
    ["group", "exponents", "rank", "dimension"].map(String::from).to_vec()
}

pub fn table1(max: u32) -> Table {
    Table {
        number: 1,
        title: "exponents of the classical groups",
        columns: exponent_columns(),
        rows: classical_groups(max).iter().map(exponent_row).collect(),
    }
}

pub fn table2() -> Table {
    Table {
        number: 2,
        title: "exponents of the exceptional groups",
        columns: exponent_columns(),
        rows: exceptional_groups().iter().map(exponent_row).collect(),
    }
}

/// dim Hit(S²(3,3,4), PGL(n)) for n = 2..=max.
pub fn table3_values(max: u32) -> Vec<(u32, i64)> {
    let o = parse_signature("S2(3,3,4)").expect("valid signature");
    (2..=max)
        .map(|n| (n, hitchin_dim(&o, &LieType::psl(n).expect("n >= 2")).expect("hyperbolic").value))
        .collect()
}

pub fn table3(max: u32) -> Table {
    Table {
        number: 3,
        title: "dim Hit(S2(3,3,4), PGL(n)); the (3,3,4) reflection triangle group gives half",
        columns: ["n", "n mod 12", "dimension"].map(String::from).to_vec(),
        rows: table3_values(max).into_iter().map(|(n, d)| vec![json!(n), json!(n % 12), json!(d)]).collect(),
    }
}

fn euclidean_columns() -> Vec<String> {
    std::iter::once("group".to_string()).chain(EuclideanClass::ALL.iter().map(|e| e.to_string())).collect()
}

pub fn table4_row(g: &LieType) -> [i64; 5] {
    EuclideanClass::ALL.map(|e| euclidean_char_dim(e, g))
}

pub fn table5_row(g: &LieType) -> [i64; 5] {
    EuclideanClass::ALL.map(|e| euclidean_invariant_dim(e, g) as i64)
}

fn euclidean_table(number: u8, title: &'static str, max: u32, row: fn(&LieType) -> [i64; 5]) -> Table {
    let groups = classical_groups(max).into_iter().chain(exceptional_groups());
    Table {
        number,
        title,
        columns: euclidean_columns(),
        rows: groups
            .map(|g| std::iter::once(json!(g.to_string())).chain(row(&g).iter().map(|v| json!(v))).collect())
            .collect(),
    }
}

pub fn table4(max: u32) -> Table {
    euclidean_table(4, "dim X(O, G) at the principal image of a horospherical cusp holonomy", max, table4_row)
}

pub fn table5(max: u32) -> Table {
    euclidean_table(5, "dim of the invariants of the principal image of a cusp group in the Lie algebra", max, table5_row)
}

/// Table `number` with the given parameter limit (ignored for table 2).
pub fn table(number: u8, max: Option<u32>) -> Option<Table> {
    Some(match number {
        1 => table1(max.unwrap_or(DEFAULT_TABLE1_MAX)),
        2 => table2(),
        3 => table3(max.unwrap_or(DEFAULT_TABLE3_MAX)),
        4 => table4(max.unwrap_or(DEFAULT_TABLE45_MAX)),
        5 => table5(max.unwrap_or(DEFAULT_TABLE45_MAX)),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(table1(5).rows.len(), 4 + 5 + 5 + 3);
        assert_eq!(table2().rows.len(), 5);
        assert_eq!(table3(14).rows.len(), 13);
        assert_eq!(table4(3).columns.len(), 6);
        assert!(table(6, None).is_none());
    }

    #[test]
    fn tsv_layout() {
        let t = table2().to_tsv();
        assert!(t.starts_with("group\texponents\trank\tdimension\nG2\t1,5\t2\t14\n"));
    }
}
