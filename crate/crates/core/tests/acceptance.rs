//! End-to-end acceptance checks. Prints one line per criterion and exits nonzero if
//! any criterion fails.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gcenter::autoact::{
    conjugate_by, star_compose, validate_action, validate_comonoidal_automorphism, ActionData, ComonoidalAutomorphism,
};
use gcenter::catalog::{
    center_family, fixture_project, intro_s3, intro_z4, ks3, kz2, kz2_cocycle, kz3, s3_conjugation, sweedler,
    sweedler_scaling, sweedler_z2, sweedler_z2_twisted, trivial, z2_on_kz3,
};
use gcenter::eqcenter::{center_suite, compositor, yd_tensor, CenterObject, TUPLE_DIM_CAP};
use gcenter::exactlin::{Mat, Scalar};
use gcenter::gdouble::{
    build_g_coalgebra, compare_with_double_modules, double_module_to_yd, regular_objects, validate_double, validate_g_coalgebra,
    yd_to_double_module, CoproductMode, DoubleAlgebra, DoubleModule,
};
use gcenter::hopfcore::{dual_cop, regular_module, validate_hopf, HopfAlgebra};
use gcenter::project::{emit_report, run_suite, serialize_project, parse_project};
use gcenter::report::{Format, Report};
use gcenter::ydmod::{
    coaction_from_half_braiding, half_braiding, trivial_yd, validate_yd, validate_yd_morphism, YDModule,
};

type Outcome = Result<String, String>;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(r: &Report, what: &str) -> Result<usize, String> {
    match r.failures().next() {
        None => Ok(r.len()),
        Some(f) => Err(format!("{what}: {} ({}) {}", f.id, f.operands, f.witness.clone().unwrap_or_default())),
    }
}

fn corrupted(h: &HopfAlgebra, part: usize, i: usize, j: usize) -> Option<HopfAlgebra> {
    let bump = |m: &Mat| {
        let mut m = m.clone();
        let v = m.get(i, j) + &Scalar::one();
        m.set(i, j, v);
        m
    };
    let bump_vec = |v: &Vec<Scalar>| {
        let mut v = v.clone();
        v[j] = &v[j] + &Scalar::one();
        v
    };
    let (mut mult, mut unit, mut comult, mut counit) = (h.mult().clone(), h.unit().clone(), h.comult().clone(), h.counit().clone());
    let mut antipode = h.antipode().cloned();
    match part {
        0 => mult = bump(&mult),
        1 => unit = bump_vec(&unit),
        2 => comult = bump(&comult),
        3 => counit = bump_vec(&counit),
        _ => antipode = Some(bump(antipode.as_ref()?)),
    }
    HopfAlgebra::with_antipode_inverse(
        h.name(),
        h.labels().to_vec(),
        mult,
        unit,
        comult,
        counit,
        antipode,
        h.antipode_inverse().cloned(),
    )
    .ok()
}

fn hopf_axioms() -> Outcome {
    let mut checks = 0;
    let mut corruptions = 0;
    for h in [trivial(), kz2(), kz3(), ks3(), sweedler()] {
        checks += all_pass(&validate_hopf(&h), h.name())?;
        let d = dual_cop(&h).map_err(|e| e.to_string())?;
        checks += all_pass(&validate_hopf(&d), d.name())?;
        let n = h.dim();
        let sizes = [(n, n * n), (1, n), (n * n, n), (1, n), (n, n)];
        for (part, &(rows, cols)) in sizes.iter().enumerate() {
            for i in 0..rows {
                for j in 0..cols {
                    let c = corrupted(&h, part, i, j).ok_or("corruption could not be assembled")?;
                    let r = validate_hopf(&c);
                    require(!r.all_pass() && r.failures().all(|f| f.witness.is_some()), || {
                        format!("{}: corrupting entry ({i}, {j}) of part {part} went undetected", h.name())
                    })?;
                    corruptions += 1;
                }
            }
        }
    }
    Ok(format!("{checks} axiom checks pass, {corruptions} single-entry corruptions detected"))
}

fn random_automorphism(rng: &mut ChaCha8Rng, h: &Arc<HopfAlgebra>) -> ComonoidalAutomorphism {
    let mut pick = || Scalar::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3));
    let mut lambda = pick();
    if lambda.is_zero() {
        lambda = Scalar::one();
    }
    let a = vec![Scalar::one(), Scalar::zero(), pick(), pick()];
    conjugate_by(&sweedler_scaling(h, lambda), &a).expect("1 + nilpotent is invertible")
}

fn automorphisms() -> Outcome {
    let h = sweedler();
    let id = ComonoidalAutomorphism::identity(h.clone());
    let flip = sweedler_scaling(&h, Scalar::int(-1));
    let mut checks = 0;
    for f in [&id, &flip] {
        checks += all_pass(&validate_comonoidal_automorphism(f), f.name())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pool: Vec<_> = (0..6).map(|_| random_automorphism(&mut rng, &h)).chain([id, flip]).collect();
    for a in &pool {
        for b in &pool {
            let c = star_compose(a, b).map_err(|e| e.to_string())?;
            checks += all_pass(&validate_comonoidal_automorphism(&c), "star output")?;
        }
    }
    for t in 0..20 {
        let [a, b, c] = [0, 1, 2].map(|_| random_automorphism(&mut rng, &h));
        let l = star_compose(&star_compose(&a, &b).unwrap(), &c).unwrap();
        let r = star_compose(&a, &star_compose(&b, &c).unwrap()).unwrap();
        require(l.map() == r.map() && l.f2() == r.f2(), || format!("star not associative on random triple {t}"))?;
    }
    Ok(format!("{checks} checks pass, star associative on 20 random triples"))
}

fn actions() -> Outcome {
    let mut checks = 0;
    for a in [intro_s3(), intro_z4()] {
        checks += all_pass(&validate_action(&a), a.name())?;
    }
    let a = intro_z4();
    let grp = a.group();
    let m = grp.index_of("1").ok_or("label 1")?;
    let reg = CenterObject::new(&a, grp.identity(), {
        let h = a.hopf().clone();
        let module = regular_module(&h);
        let coaction = Mat::from_fn(h.dim() * h.dim(), h.dim(), |r, x| {
            if r == x { Scalar::one() } else { Scalar::zero() }
        });
        YDModule::new("reg", a.auto(grp.identity()).clone(), None, module, coaction).map_err(|e| e.to_string())?
    })
    .map_err(|e| e.to_string())?;
    let c = compositor(&a, m, m, &reg).map_err(|e| e.to_string())?;
    require(!c.map.is_identity(), || "compositor at (1, 1) is the identity".into())?;
    for x in center_family(&a).iter().chain([&reg]) {
        for g in grp.elements() {
            for h in grp.elements() {
                let c = compositor(&a, g, h, x).map_err(|e| e.to_string())?;
                checks += all_pass(&validate_yd_morphism(&c.source, &c.target, &c.map), "compositor")?;
            }
        }
    }
    Ok(format!("{checks} checks pass, compositor at (1, 1) acts as the generator {}", c.map.to_string().trim().replace('\n', " ")))
}

fn yd_round_trip(x: &YDModule) -> Result<(), String> {
    let gamma = half_braiding(x, &regular_module(x.hopf()));
    let back = coaction_from_half_braiding(x.twist().clone(), x.module(), &gamma, None).map_err(|e| e.to_string())?;
    require(back.coaction() == x.coaction(), || format!("{}: round trip changed the coaction", x.name()))
}

fn yd_modules() -> Outcome {
    let strict = [sweedler_z2(), intro_s3(), z2_on_kz3(), s3_conjugation()];
    let nonstrict = [intro_z4(), sweedler_z2_twisted(), kz2_cocycle(Scalar::int(2))];
    let mut modules = Vec::new();
    let mut twists = Vec::new();
    for a in strict.iter().chain(&nonstrict) {
        modules.extend(center_family(a).into_iter().map(CenterObject::into_yd));
        twists.extend(a.autos().iter().cloned());
    }
    for a in &strict[..3] {
        let data = build_g_coalgebra(a, CoproductMode::Modified).map_err(|e| e.to_string())?;
        modules.extend(regular_objects(&data).map_err(|e| e.to_string())?.into_iter().map(CenterObject::into_yd));
    }
    let mut agreements = 0;
    for x in &modules {
        let r = validate_yd(x);
        all_pass(&r, x.name())?;
        yd_round_trip(x)?;
        for row in [0, x.coaction().rows() - 1] {
            let mut c = x.coaction().clone();
            let v = c.get(row, 0) + &Scalar::one();
            c.set(row, 0, v);
            let action = (0..x.hopf().dim()).map(|i| x.action(i).clone()).collect();
            let y = YDModule::from_action("perturbed", x.twist().clone(), None, action, c).map_err(|e| e.to_string())?;
            require(validate_yd(&y).verdict("yd.forms_agree"), || format!("{}: forms disagree after perturbation", x.name()))?;
            agreements += 1;
        }
    }
    let mut trivial_cases = 0;
    for f in &twists {
        let valid = validate_yd(&trivial_yd(f.clone())).all_pass();
        require(valid == f.is_identity(), || format!("trivial module under {}: valid {valid}", f.name()))?;
        trivial_cases += 1;
    }
    Ok(format!(
        "{} modules validate and round-trip, {agreements} perturbations keep both forms in agreement, {trivial_cases} trivial-module cases",
        modules.len()
    ))
}

fn center() -> Outcome {
    let mut checks = 0;
    let mut discrepancies = Vec::new();
    let actions = [sweedler_z2(), intro_s3(), z2_on_kz3(), intro_z4(), sweedler_z2_twisted(), kz2_cocycle(Scalar::int(2))];
    for a in actions.iter().chain([&s3_conjugation()]) {
        let mut family = center_family(a);
        if a.name() == "s3_conjugation" {
            family.truncate(4);
        }
        let r = center_suite(a, &family);
        for f in r.failures() {
            if f.id != "center.crossed_printed_form" || f.witness.is_none() {
                return Err(format!("{}: {} ({}) {}", a.name(), f.id, f.operands, f.witness.clone().unwrap_or_default()));
            }
            discrepancies.push(format!("{} [{}]", f.operands, f.witness.clone().unwrap_or_default()));
        }
        for id in ["center.crossed_closure", "center.crossed_amended_form", "diagram.hepta1", "diagram.hepta2", "diagram.action_braid"] {
            require(r.checks.iter().any(|c| c.id == id), || format!("{}: no {id} checks ran", a.name()))?;
        }
        checks += r.len();
    }
    require(!discrepancies.is_empty(), || "expected the printed closed form to differ on the twisted Sweedler action".into())?;
    Ok(format!(
        "{checks} checks; only the printed closed form of the crossed coaction differs, reported {} times: {}",
        discrepancies.len(),
        discrepancies[0]
    ))
}

fn doubles() -> Outcome {
    let mut checks = 0;
    let h4 = sweedler();
    let flip = Arc::new(sweedler_scaling(&h4, Scalar::int(-1)));
    let twists = [
        Arc::new(ComonoidalAutomorphism::identity(kz2())),
        Arc::new(ComonoidalAutomorphism::identity(kz3())),
        Arc::new(ComonoidalAutomorphism::identity(h4.clone())),
        flip,
    ];
    for f in twists {
        let d = Arc::new(DoubleAlgebra::from_twist(f).map_err(|e| e.to_string())?);
        let r = validate_double(&d);
        checks += all_pass(&r, "double")?;
        let reg = DoubleModule::regular(&d);
        checks += all_pass(&reg.validate("regular"), "regular module")?;
        let yd = double_module_to_yd(&reg).map_err(|e| e.to_string())?;
        checks += all_pass(&validate_yd(&yd), "module from the double")?;
        let again = yd_to_double_module(&d, &yd).map_err(|e| e.to_string())?;
        require(again.action() == reg.action(), || "double module round trip".into())?;
    }
    for a in [sweedler_z2(), z2_on_kz3(), intro_s3()] {
        let data = build_g_coalgebra(&a, CoproductMode::Modified).map_err(|e| e.to_string())?;
        for x in center_family(&a) {
            let m = yd_to_double_module(data.double(x.grade()), x.yd()).map_err(|e| e.to_string())?;
            checks += all_pass(&m.validate(x.name()), "module of the double")?;
            let back = double_module_to_yd(&m).map_err(|e| e.to_string())?;
            require(back.coaction() == x.yd().coaction(), || format!("{}: round trip", x.name()))?;
            for i in 0..a.hopf().dim() {
                require(back.action(i) == x.yd().action(i), || format!("{}: round trip", x.name()))?;
            }
        }
    }
    Ok(format!("{checks} checks pass; round trips are entrywise identities"))
}

fn double_module_family(a: &ActionData) -> Result<usize, String> {
    let data = build_g_coalgebra(a, CoproductMode::Modified).map_err(|e| e.to_string())?;
    let mut count = all_pass(&validate_g_coalgebra(&data), "g-coalgebra")?;
    let regs = regular_objects(&data).map_err(|e| e.to_string())?;
    let mut family = vec![CenterObject::unit(a)];
    family.extend(regs.iter().cloned());
    for x in &regs {
        for y in &regs {
            family.push(yd_tensor(a, x, y).map_err(|e| e.to_string())?);
        }
    }
    for x in &family {
        for y in &family {
            if x.dim() * y.dim() > TUPLE_DIM_CAP {
                continue;
            }
            for d in compare_with_double_modules(&data, x, y).map_err(|e| e.to_string())? {
                require(d.pass, || format!("{} on {}: {}", d.diagram, d.operands, d.witness.clone().unwrap_or_default()))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn double_modules() -> Outcome {
    let a = double_module_family(&z2_on_kz3())?;
    let b = double_module_family(&sweedler_z2())?;
    Ok(format!("{a} identities for Z/2 on k[Z/3], {b} for Z/2 on H4"))
}

fn determinism() -> Outcome {
    let mut runs = 0;
    for stem in ["sweedler", "intro_z4", "z2_on_kz3", "sweedler_twisted"] {
        let p = parse_project(&serialize_project(&fixture_project(stem).ok_or("fixture")?)).map_err(|e| e.to_string())?;
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| emit_report(&run_suite(&p, "all").unwrap(), Format::Machine))
        };
        let reference = run(1);
        for threads in [1, 2, 8] {
            require(run(threads) == reference, || format!("{stem}: output differs with {threads} threads"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} machine reports byte-identical across runs and thread counts"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("hopf_axioms", hopf_axioms),
        ("comonoidal_automorphisms", automorphisms),
        ("group_actions", actions),
        ("yetter_drinfeld_modules", yd_modules),
        ("equivariant_center", center),
        ("twisted_doubles", doubles),
        ("center_vs_double_modules", double_modules),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
