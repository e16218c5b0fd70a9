//! Named, versioned lists of probe modules.
//!
//! Identity checks between algebra elements are evaluation-based, so the
//! exact list of modules a check ran against is part of what the result
//! means.  Batteries are therefore fixed presets with a name and a version;
//! tests and CLI reports cite the preset instead of an ad-hoc list, and any
//! change to a preset's contents must bump its version.

use crate::error::{Error, Result};
use crate::repbuilder::{highest_weight_module, tensor_module, Module};
use crate::rootdata::{CartanDatum, Weight};
use crate::uqalg::Algebra;

/// A fixed, named list of probe modules.
pub struct Battery {
    name: &'static str,
    version: u32,
    labels: Vec<String>,
    modules: Vec<Module>,
}

impl Battery {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    /// The probe modules, in the preset's fixed order.
    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    /// Human-readable label of the `i`-th module, e.g. `V(1,0)` or
    /// `V(1,0)(x)V(1,0)`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}

fn weight_label(w: &Weight) -> String {
    let coords: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
    format!("V({})", coords.join(","))
}

struct BatteryBuilder<'a> {
    alg: &'a Algebra,
    labels: Vec<String>,
    modules: Vec<Module>,
}

impl<'a> BatteryBuilder<'a> {
    fn new(alg: &'a Algebra) -> Self {
        BatteryBuilder {
            alg,
            labels: Vec::new(),
            modules: Vec::new(),
        }
    }

    fn simple(&mut self, coords: Vec<i64>) -> Result<&mut Self> {
        let w = Weight::new(coords);
        self.labels.push(weight_label(&w));
        self.modules.push(highest_weight_module(self.alg, &w)?);
        Ok(self)
    }

    fn tensor_of_fundamentals(&mut self, i: usize, j: usize) -> Result<&mut Self> {
        let rank = self.alg.datum().rank();
        let wi = Weight::fundamental(rank, i);
        let wj = Weight::fundamental(rank, j);
        let left = highest_weight_module(self.alg, &wi)?;
        let right = highest_weight_module(self.alg, &wj)?;
        self.labels
            .push(format!("{}(x){}", weight_label(&wi), weight_label(&wj)));
        self.modules.push(tensor_module(self.alg, &left, &right));
        Ok(self)
    }

    fn finish(self, name: &'static str, version: u32) -> Battery {
        Battery {
            name,
            version,
            labels: self.labels,
            modules: self.modules,
        }
    }
}

fn require_type(alg: &Algebra, name: &str, allowed: &[&str]) -> Result<()> {
    let actual = alg.datum().name();
    if allowed.iter().any(|t| *t == actual) {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "battery {name:?} is defined for {allowed:?}, not {actual}"
        )))
    }
}

/// Look up a battery preset by name and instantiate it for the given
/// algebra.
///
/// Presets:
/// - `a1-default` (v1, rank 1): `V(n w1)` for `n = 0..=4` plus the tensor
///   square of `V(w1)`.
/// - `rank2-default` (v1, A2/B2/C2): all `V(a w1 + b w2)` with `a + b <= 2`
///   plus the tensor square of `V(w1)`.
/// - `g2-default` (v1, G2): the trivial module and both fundamentals; no
///   tensor factor, to keep dimensions at desk scale.
/// - `a3-smoke` (v1, A3): the trivial module and the three fundamentals.
/// - `fundamentals` (v1, any type): the trivial module and every
///   fundamental; the generic path for ranks outside the presets above.
pub fn battery(alg: &Algebra, name: &str) -> Result<Battery> {
    let rank = alg.datum().rank();
    match name {
        "a1-default" => {
            require_type(alg, name, &["A1"])?;
            let mut b = BatteryBuilder::new(alg);
            for n in 0..=4 {
                b.simple(vec![n])?;
            }
            b.tensor_of_fundamentals(0, 0)?;
            Ok(b.finish("a1-default", 1))
        }
        "rank2-default" => {
            require_type(alg, name, &["A2", "B2", "C2"])?;
            let mut b = BatteryBuilder::new(alg);
            for total in 0..=2i64 {
                for a in (0..=total).rev() {
                    b.simple(vec![a, total - a])?;
                }
            }
            b.tensor_of_fundamentals(0, 0)?;
            Ok(b.finish("rank2-default", 1))
        }
        "g2-default" => {
            require_type(alg, name, &["G2"])?;
            let mut b = BatteryBuilder::new(alg);
            b.simple(vec![0, 0])?;
            b.simple(vec![1, 0])?;
            b.simple(vec![0, 1])?;
            Ok(b.finish("g2-default", 1))
        }
        "a3-smoke" => {
            require_type(alg, name, &["A3"])?;
            let mut b = BatteryBuilder::new(alg);
            b.simple(vec![0, 0, 0])?;
            for i in 0..3 {
                let mut c = vec![0i64; 3];
                c[i] = 1;
                b.simple(c)?;
            }
            Ok(b.finish("a3-smoke", 1))
        }
        "fundamentals" => {
            let mut b = BatteryBuilder::new(alg);
            b.simple(vec![0; rank])?;
            for i in 0..rank {
                let mut c = vec![0i64; rank];
                c[i] = 1;
                b.simple(c)?;
            }
            Ok(b.finish("fundamentals", 1))
        }
        other => Err(Error::UnknownBattery(other.to_string())),
    }
}

/// The preset used when no battery is named explicitly.
pub fn default_battery_name(datum: &CartanDatum) -> &'static str {
    match datum.name().as_str() {
        "A1" => "a1-default",
        "A2" | "B2" | "C2" => "rank2-default",
        "G2" => "g2-default",
        "A3" => "a3-smoke",
        _ => "fundamentals",
    }
}

pub fn default_battery(alg: &Algebra) -> Result<Battery> {
    battery(alg, default_battery_name(alg.datum()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repbuilder::weyl_dimension;
    use num::BigInt;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::from_name(name).unwrap())
    }

    #[test]
    fn rank_one_preset_contents() {
        let a1 = alg("A1");
        let b = battery(&a1, "a1-default").unwrap();
        assert_eq!(b.name(), "a1-default");
        assert_eq!(b.version(), 1);
        assert_eq!(b.len(), 6);
        let dims: Vec<usize> = b.modules().iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![1, 2, 3, 4, 5, 4]);
        assert_eq!(b.label(1), "V(1)");
        assert_eq!(b.label(5), "V(1)(x)V(1)");
    }

    #[test]
    fn rank_two_preset_matches_weyl_dimensions() {
        let a2 = alg("A2");
        let b = battery(&a2, "rank2-default").unwrap();
        assert_eq!(b.len(), 7);
        for (i, m) in b.modules().iter().enumerate() {
            if b.label(i).contains("(x)") {
                assert_eq!(m.dim(), 9);
            } else {
                let coords: Vec<i64> = b.label(i)
                    .trim_start_matches("V(")
                    .trim_end_matches(')')
                    .split(',')
                    .map(|s| s.parse().unwrap())
                    .collect();
                let expect = weyl_dimension(a2.datum(), &Weight::new(coords));
                assert_eq!(BigInt::from(m.dim()), expect);
            }
        }
    }

    #[test]
    fn preset_names_are_guarded() {
        let a2 = alg("A2");
        assert!(matches!(
            battery(&a2, "no-such-battery"),
            Err(Error::UnknownBattery(_))
        ));
        assert!(battery(&a2, "a1-default").is_err());
        assert!(battery(&a2, "g2-default").is_err());
    }

    #[test]
    fn default_names_by_type() {
        assert_eq!(
            default_battery_name(&CartanDatum::from_name("A1").unwrap()),
            "a1-default"
        );
        assert_eq!(
            default_battery_name(&CartanDatum::from_name("B2").unwrap()),
            "rank2-default"
        );
        assert_eq!(
            default_battery_name(&CartanDatum::from_name("G2").unwrap()),
            "g2-default"
        );
        assert_eq!(
            default_battery_name(&CartanDatum::from_name("A3").unwrap()),
            "a3-smoke"
        );
        assert_eq!(
            default_battery_name(&CartanDatum::from_name("A4").unwrap()),
            "fundamentals"
        );
    }

    #[test]
    fn generic_preset_builds_for_higher_rank() {
        let a4 = alg("A4");
        let b = battery(&a4, "fundamentals").unwrap();
        assert_eq!(b.len(), 5);
        let dims: Vec<usize> = b.modules().iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![1, 5, 10, 10, 5]);
    }
}
