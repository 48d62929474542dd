use std::sync::Arc;

use serde::Serialize;

use super::ClassFunction;
use crate::arith::Cyclotomic;
use crate::group::FiniteGroup;

/// Complete set of irreducible characters of a group, one labelled row each.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    pub labels: Vec<String>,
    pub characters: Vec<ClassFunction>,
}

#[derive(Serialize)]
struct JsonClass {
    representative: String,
    size: usize,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    label: &'a str,
    values: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    group: &'a str,
    order: usize,
    classes: Vec<JsonClass>,
    characters: Vec<JsonRow<'a>>,
}

/// Exact values use the cyclotomic grammar (`-1/2`, `z5+z5^4`); with
/// `float` they are printed with 12 significant digits.
pub fn format_value(x: &Cyclotomic, float: bool) -> String {
    if !float {
        return x.to_string();
    }
    let (re, im) = (x.to_f64(), x.imag_f64());
    if im.abs() < 1e-12 {
        significant(re)
    } else {
        let sign = if im < 0.0 { "-" } else { "+" };
        format!("{}{sign}{}i", significant(re), significant(im.abs()))
    }
}

fn significant(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl CharacterTable {
    /// Two header rows (`class` with representatives, `size` with class
    /// sizes), then one row per irreducible: label followed by values.
    pub fn to_tsv(&self, float: bool) -> String {
        let cd = self.group.classes();
        let mut out = String::from("class");
        for &r in cd.representatives() {
            out.push('\t');
            out.push_str(&self.group.element(r).to_string());
        }
        out.push_str("\nsize");
        for s in cd.sizes() {
            out.push_str(&format!("\t{s}"));
        }
        out.push('\n');
        for (label, chi) in self.labels.iter().zip(&self.characters) {
            out.push_str(label);
            for v in chi.values() {
                out.push('\t');
                out.push_str(&format_value(v, float));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, float: bool) -> String {
        let cd = self.group.classes();
        let table = JsonTable {
            group: self.group.name(),
            order: self.group.order(),
            classes: (0..cd.count())
                .map(|c| JsonClass {
                    representative: self.group.element(cd.representative(c)).to_string(),
                    size: cd.size(c),
                })
                .collect(),
            characters: self
                .labels
                .iter()
                .zip(&self.characters)
                .map(|(label, chi)| JsonRow {
                    label,
                    values: chi.values().iter().map(|v| format_value(v, float)).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&table).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(significant(0.5), "0.5");
        assert_eq!(significant(-1.0), "-1");
        assert_eq!(significant(1.0 / 3.0), "0.333333333333");
        assert_eq!(significant(2.0 * (std::f64::consts::PI / 5.0).cos()), "1.61803398875");
        assert_eq!(significant(1e-15), "0");
        let golden: Cyclotomic = "z5+z5^4".parse().unwrap();
        assert_eq!(format_value(&golden, false), "z5+z5^4");
        assert_eq!(format_value(&golden, true), "0.61803398875");
        assert_eq!(format_value(&Cyclotomic::zeta(4, 1), true), "0+1i");
    }
}
