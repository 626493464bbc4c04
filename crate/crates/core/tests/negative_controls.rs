//! Each check, fed a corrupted functor, must fail with a counterexample.

use thetadisk::disk::{phi_mor, phi_obj, DiskMor};
use thetadisk::globular::GlobMor;
use thetadisk::itree::{vee, vee_mor, wedge, wedge_mor, ITreeMor, ITreeObj};
use thetadisk::labeled::{xi, xi_mor, LabeledTreeMor};
use thetadisk::ograph::{gamma, gamma_mor, upsilon, OGraph};
use thetadisk::omega::{l_functor, m_source, psi_mor};
use thetadisk::ordinal::{vee_map, wedge_map, OrdMap};
use thetadisk::verify::*;

fn fails(r: Report) {
    assert!(!r.pass, "{} passed with a corrupted functor", r.theorem);
    assert!(r.counterexample.is_some());
    let line = r.to_json_line();
    assert!(line.contains("\"pass\":false"));
}

fn small() -> Bounds {
    "height=2,degree=2,label=2,vertices=3,dim=2".parse().unwrap()
}

#[test]
fn ordinal_duality_detects_a_collapsed_vee() {
    let corrupt = |f: &thetadisk::ordinal::IntervalMap| {
        let g = vee_map(f);
        if g.cod().len() > 1 && !g.images().is_empty() {
            OrdMap::new(g.dom(), g.cod(), vec![0; g.images().len()]).unwrap()
        } else {
            g
        }
    };
    fails(check_ordinal_duality_with(&small(), corrupt, wedge_map));
}

#[test]
fn itree_duality_detects_a_wrong_dual_morphism() {
    let corrupt = |f: &ITreeMor| vee_mor(&ITreeMor::identity(f.dom()));
    fails(check_itree_duality_with(&small(), vee, wedge, corrupt, wedge_mor));
}

#[test]
fn itree_duality_detects_a_wrong_dual_object() {
    let corrupt = |h: &ITreeObj| vee(h).map(|k| if h.height() > 1 { ITreeObj::trivial(k.flavor()) } else { k });
    fails(check_itree_duality_with(&small(), corrupt, wedge, vee_mor, wedge_mor));
}

#[test]
fn phi_detects_a_corrupted_morphism_map() {
    let b: Bounds = "degree=2,label=3,height=2".parse().unwrap();
    let corrupt = |f: &DiskMor| phi_mor(&DiskMor::identity(f.dom()));
    fails(check_phi_with(&b, phi_obj, corrupt));
}

#[test]
fn phi_detects_a_corrupted_object_map() {
    let corrupt = |d: &thetadisk::disk::Disk| {
        if d.degree() > 0 {
            ITreeObj::trivial(thetadisk::itree::Flavor::Interval)
        } else {
            phi_obj(d)
        }
    };
    fails(check_phi_with(&small(), corrupt, phi_mor));
}

#[test]
fn gamma_detects_a_corrupted_morphism_map() {
    let corrupt = |f: &GlobMor| gamma_mor(&GlobMor::identity(f.dom()));
    fails(check_gamma_with(&small(), gamma, corrupt));
}

#[test]
fn upsilon_detects_a_non_surjective_map() {
    let corrupt = |h: &ITreeObj| upsilon(h).map(|g| if h.height() > 1 { OGraph::point() } else { g });
    fails(check_upsilon_with(&small(), corrupt));
}

#[test]
fn l_detects_a_dimension_drop() {
    let corrupt = |c: &thetadisk::omega::Cell| {
        if c.dim() > 0 {
            l_functor(&m_source(c, 0)?)
        } else {
            l_functor(c)
        }
    };
    fails(check_l_with(&small(), corrupt));
}

#[test]
fn omega_laws_detect_a_projection_composite() {
    let corrupt = |_beta: &thetadisk::omega::Cell, alpha: &thetadisk::omega::Cell, _m: usize| Ok(alpha.clone());
    fails(check_omega_laws_with(&small(), corrupt));
}

#[test]
fn psi_detects_a_constant_functor() {
    let corrupt = |g: &ITreeMor| psi_mor(&ITreeMor::identity(g.dom()));
    fails(check_psi_with(&small(), corrupt));
}

#[test]
fn xi_detects_a_forgetful_morphism_map() {
    let corrupt = |m: &LabeledTreeMor| xi_mor(&LabeledTreeMor::identity(m.dom()));
    fails(check_xi_with(&small(), xi, corrupt));
}
