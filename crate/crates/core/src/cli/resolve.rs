use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::cli::document::{Binding, MorphismSpec, SpaceDescription};
use crate::error::{Error, Result};
use crate::simplicial::builders::{
    circle, delta, join, mapping_cone_space, point, sphere, suspension_space, wedge,
};
use crate::simplicial::{
    cartesian_product, pushout_space, PushoutSpace, Simplex, SimplexLevel, SimplexWord, SimplicialMorphism,
    SimplicialSet,
};

/// A resolved binding: its space and, for pushout constructions, the
/// pushout data.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub space: Arc<SimplicialSet>,
    pub pushout: Option<PushoutSpace>,
}

impl Resolved {
    fn plain(space: SimplicialSet) -> Self {
        Self { space: space.into_arc(), pushout: None }
    }

    fn glued(p: PushoutSpace) -> Self {
        Self { space: p.space().clone(), pushout: Some(p) }
    }
}

/// Resolves bindings on demand, caching results and rejecting cycles.
pub struct Resolver<'a> {
    bindings: &'a BTreeMap<String, Binding>,
    done: HashMap<String, Resolved>,
    active: Vec<String>,
}

impl<'a> Resolver<'a> {
    pub fn new(doc: &'a SpaceDescription) -> Self {
        Self { bindings: &doc.spaces, done: HashMap::new(), active: Vec::new() }
    }

    pub fn resolve(&mut self, name: &str) -> Result<Resolved> {
        if let Some(r) = self.done.get(name) {
            return Ok(r.clone());
        }
        if self.active.iter().any(|n| n == name) {
            return Err(Error::InvalidInput(format!(
                "binding cycle: {} -> {name}",
                self.active.join(" -> ")
            )));
        }
        let binding = self.bindings.get(name).ok_or_else(|| Error::UnknownSpace(name.to_string()))?;
        self.active.push(name.to_string());
        let result = self.build(binding);
        self.active.pop();
        let r = result?;
        self.done.insert(name.to_string(), r.clone());
        Ok(r)
    }

    fn space(&mut self, name: &str) -> Result<Arc<SimplicialSet>> {
        Ok(self.resolve(name)?.space)
    }

    fn build(&mut self, binding: &Binding) -> Result<Resolved> {
        Ok(match binding {
            Binding::Point {} => Resolved::plain(point()),
            Binding::Empty {} => Resolved::plain(SimplicialSet::empty()),
            Binding::Sphere { n } => Resolved::plain(sphere(*n)),
            Binding::Delta { n } => Resolved::plain(delta(*n)),
            Binding::Circle { n } => {
                if *n == 0 {
                    return Err(Error::InvalidInput("a circle needs at least one vertex".into()));
                }
                Resolved::plain(circle(*n))
            }
            Binding::Simplicial { simplices, faces } => Resolved::plain(face_table(simplices, faces)?),
            Binding::Wedge { left, right, left_base, right_base } => {
                let (y, z) = (self.space(left)?, self.space(right)?);
                let y0 = base_vertex(&y, left_base.as_deref())?;
                let z0 = base_vertex(&z, right_base.as_deref())?;
                Resolved::glued(wedge(&y, &z, y0, z0)?)
            }
            Binding::Join { left, right } => Resolved::glued(join(&self.space(left)?, &self.space(right)?)?),
            Binding::Product { left, right } => {
                let p = cartesian_product(&self.space(left)?, &self.space(right)?)?;
                Resolved { space: p.space().clone(), pushout: None }
            }
            Binding::Suspension { of } => Resolved::glued(suspension_space(&self.space(of)?)?),
            Binding::MappingCone { source, map } => {
                let source = self.source_of(source.as_deref(), [map])?;
                Resolved::glued(mapping_cone_space(&self.morphism(&source, map)?)?)
            }
            Binding::Pushout { source, f, g } => {
                let source = self.source_of(source.as_deref(), [f, g])?;
                Resolved::glued(pushout_space(&self.morphism(&source, f)?, &self.morphism(&source, g)?)?)
            }
        })
    }

    fn source_of<'m>(
        &mut self,
        named: Option<&str>,
        specs: impl IntoIterator<Item = &'m MorphismSpec>,
    ) -> Result<Arc<SimplicialSet>> {
        if let Some(name) = named {
            return self.space(name);
        }
        for spec in specs {
            if let MorphismSpec::DegreeMap { n } = spec {
                if *n == 0 {
                    return Err(Error::InvalidInput("degree_map needs a positive degree".into()));
                }
                return Ok(circle(*n).into_arc());
            }
        }
        Err(Error::InvalidInput("no source given and none implied by a degree_map".into()))
    }

    fn morphism(&mut self, source: &Arc<SimplicialSet>, spec: &MorphismSpec) -> Result<SimplicialMorphism> {
        match spec {
            MorphismSpec::Identity {} => Ok(SimplicialMorphism::identity(source)),
            MorphismSpec::Constant { target, vertex } => {
                let target = self.space(target)?;
                let v = base_vertex(&target, vertex.as_deref())?;
                SimplicialMorphism::constant(source, &target, v)
            }
            MorphismSpec::DegreeMap { .. } => {
                if source.top_dim().is_some_and(|d| d > 1) {
                    return Err(Error::InvalidMorphism("degree_map needs a source of dimension at most 1".into()));
                }
                let target = circle(1).into_arc();
                SimplicialMorphism::from_fn(source, &target, |s| SimplexWord::nondegenerate(Simplex::new(s.dim, 0)))
            }
            MorphismSpec::Table { target, images } => {
                let target = self.space(target)?;
                morphism_table(source, &target, images)
            }
        }
    }
}

fn base_vertex(x: &SimplicialSet, label: Option<&str>) -> Result<usize> {
    match label {
        None if x.count(0) > 0 => Ok(0),
        None => Err(Error::InvalidInput("space has no vertex to use as base point".into())),
        Some(l) => x
            .find(l)
            .filter(|s| s.dim == 0)
            .map(|s| s.index)
            .ok_or_else(|| Error::InvalidInput(format!("no vertex labelled {l}"))),
    }
}

fn morphism_table(
    source: &Arc<SimplicialSet>,
    target: &Arc<SimplicialSet>,
    images: &BTreeMap<String, String>,
) -> Result<SimplicialMorphism> {
    for label in images.keys() {
        if source.find(label).is_none() {
            return Err(Error::InvalidMorphism(format!("{label} is not a simplex of the source")));
        }
    }
    let mut table = Vec::new();
    for d in 0..source.top_dim().map_or(0, |t| t + 1) {
        let mut level = Vec::new();
        for s in source.simplices(d) {
            let label = source.label(s);
            let text = images
                .get(label)
                .ok_or_else(|| Error::InvalidMorphism(format!("no image given for {label}")))?;
            let w = target
                .parse_word(text)
                .ok_or_else(|| Error::InvalidMorphism(format!("{text:?} is not a simplex word of the target")))?;
            level.push(w);
        }
        table.push(level);
    }
    SimplicialMorphism::new(source.clone(), target.clone(), table)
}

fn face_table(simplices: &[Vec<String>], faces: &BTreeMap<String, Vec<String>>) -> Result<SimplicialSet> {
    let mut levels: Vec<SimplexLevel> = Vec::new();
    let mut known = 0;
    for (d, labels) in simplices.iter().enumerate() {
        let lower = SimplicialSet::new(levels.clone())?;
        let mut level = SimplexLevel { labels: labels.clone(), faces: Vec::new() };
        for label in labels {
            if d == 0 {
                level.faces.push(Vec::new());
                continue;
            }
            let words = faces.get(label).ok_or_else(|| Error::InvalidInput(format!("no faces given for {label}")))?;
            let parsed = words
                .iter()
                .map(|w| {
                    lower
                        .parse_word(w)
                        .filter(|w| w.dim() + 1 == d)
                        .ok_or_else(|| Error::InvalidInput(format!("face {w:?} of {label} is not a simplex word of dimension {}", d - 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            level.faces.push(parsed);
        }
        known += labels.len();
        levels.push(level);
    }
    let extra = faces.len() + simplices.first().map_or(0, Vec::len);
    if extra != known {
        return Err(Error::InvalidInput("faces listed for labels that are not simplices".into()));
    }
    SimplicialSet::new(levels)
}
