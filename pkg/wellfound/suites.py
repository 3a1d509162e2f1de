"""
Suítes de verificação: cada verificação percorre as instâncias de um teorema
sobre um universo e devolve um único Report agregado

As verificações são funções de módulo (RunConfig -> Report) para poderem ser
distribuídas num pool de processos.
"""

import itertools
import logging
import random
from typing import Callable, Dict, Iterator, List, Optional

from wellfound.approxkit import (
    Approx,
    ApproxPred,
    Key,
    approx_down_arborify,
    approx_up_arborify,
    approx_up_monotonise,
    approximable,
    approximable_from,
    barred,
    check_AC,
    check_bar_derivation,
    check_coAC,
    check_GBI,
    check_GDC,
    encoding_agreement,
    find_choice_function,
    functional_keys,
    inductively_barred,
    inductively_barred_from,
    is_choice_function,
    lift,
    ord_approx,
    ordered,
    pigeonhole_demo,
)
from wellfound.boolalg import (
    And,
    BoolExpr,
    Bottom,
    FreeAlgebra,
    GeneratedFilter,
    Not,
    Or,
    Polarity,
    Top,
    Var,
    check_BPF,
    check_BPI,
    check_coBPF,
    check_coBPI,
    check_filter_theory,
    check_roundtrip,
    prime_filter_from_model,
    prime_ideal_from_model,
    verify_filter,
    verify_prime,
)
from wellfound.config import RunConfig
from wellfound.entailkit import (
    ClauseTheory,
    Prover,
    Sequent,
    all_valuations,
    check_completeness,
    check_derivation,
    find_model_bruteforce,
    satisfies,
    sequent_holds_in,
    theory_as_approx,
    translate,
)
from wellfound.errors import UnknownSuiteError
from wellfound.formats import theory_to_document, witness_to_payload
from wellfound.foundkit import (
    PRINCIPLES,
    Boundary,
    all_itrees,
    check_principle,
    classify,
    find_branch,
    has_infinite_branch,
    has_unbounded_paths,
    hereditary_closure,
    is_barred,
    is_barricaded,
    is_hereditary,
    is_inductively_barred,
    is_productive,
    is_spread,
    is_staged_barred,
    is_staged_infinite,
    is_uniformly_barred,
    is_well_founded_at,
    itree_to_extensional,
    pruning,
    realises,
    verify_witness,
)
from wellfound.predkit import (
    Pred,
    Universe,
    chain_predicate,
    down_arborify,
    down_monotonise,
    is_monotone,
    is_tree,
    up_arborify,
    up_monotonise,
)
from wellfound.relkit import (
    HomRel,
    all_het_relations,
    all_hom_relations,
    alignment,
    antichaining,
    blockings,
    cc_agrees_with_dc,
    chaining,
    check_BI_least,
    check_CC,
    check_DC_serial,
    check_WBI,
    is_serial,
    is_serial_below_depth,
    reverse_relation,
    transport_branch,
    wbi_agrees_with_bi,
)
from wellfound.report import Report, Tally
from wellfound.seqcore import Alphabet

logger = logging.getLogger(__name__)

Check = Callable[[RunConfig], Report]

# Acima desses limites as instâncias são amostradas ou a verificação é pulada
EXHAUSTIVE_NODES = 15
ENCODING_EXHAUSTIVE_NODES = 7
MAX_RELATION_CARRIER = 3
MAX_HET_PAIRS = 12
MAX_ITREES = 1000
MAX_GENERATOR_KEYS = 9

CLOSED_NOTE = "identidade de profundidade finita válida só na convenção OPEN"


# Geradores de instâncias


def _universe(config: RunConfig) -> Universe:
    return Universe.of(config.alphabet, config.depth)


def _predicates(
    config: RunConfig, exhaustive_nodes: int = EXHAUSTIVE_NODES
) -> Iterator[Pred]:
    """Todos os predicados do universo, ou uma amostra determinística"""
    universe = _universe(config)
    count = universe.node_count
    if count <= exhaustive_nodes:
        for mask in range(1 << count):
            yield Pred(universe, mask)
        return
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        yield Pred(universe, rng.getrandbits(count))


def _sample_note(config: RunConfig) -> str:
    return f"amostra de {config.samples} (semente {config.seed})"


def _predicates_note(
    config: RunConfig, exhaustive_nodes: int = EXHAUSTIVE_NODES
) -> str:
    if _universe(config).node_count <= exhaustive_nodes:
        return "exaustivo"
    return _sample_note(config)


def _hom_relations(config: RunConfig) -> Iterator[HomRel]:
    carrier = Alphabet(config.alphabet)
    if config.alphabet <= MAX_RELATION_CARRIER:
        yield from all_hom_relations(carrier)
        return
    rng = random.Random(config.seed)
    n = config.alphabet
    for _ in range(config.samples):
        yield HomRel(
            carrier,
            tuple(tuple(rng.random() < 0.5 for _ in range(n)) for _ in range(n)),
        )


def disjoint_sequents(size: int) -> Iterator[Sequent]:
    """Todo Γ ▷ Δ com Γ ∩ Δ = ∅ sobre `size` átomos"""
    for roles in itertools.product(range(3), repeat=size):
        yield Sequent(
            frozenset(i for i, r in enumerate(roles) if r == 1),
            frozenset(i for i, r in enumerate(roles) if r == 2),
        )


def random_clause(rng: random.Random, size: int) -> Sequent:
    roles = [rng.choice((0, 0, 1, 2)) for _ in range(size)]
    return Sequent(
        frozenset(i for i, r in enumerate(roles) if r == 1),
        frozenset(i for i, r in enumerate(roles) if r == 2),
    )


def random_theory(
    rng: random.Random, max_atoms: int, max_clauses: int = 4
) -> ClauseTheory:
    size = rng.randint(1, max_atoms)
    clauses = [random_clause(rng, size) for _ in range(rng.randint(0, max_clauses))]
    return ClauseTheory.of([f"p{i}" for i in range(size)], clauses)


def small_theories(max_atoms: int) -> Iterator[ClauseTheory]:
    """Todas as teorias de cláusulas disjuntas com até max_atoms átomos"""
    for size in range(max_atoms + 1):
        clauses = list(disjoint_sequents(size))
        atoms = [f"p{i}" for i in range(size)]
        for chosen in itertools.product((False, True), repeat=len(clauses)):
            yield ClauseTheory.of(
                atoms, [c for c, keep in zip(clauses, chosen) if keep]
            )


def _theories(
    config: RunConfig, exhaustive_atoms: int, sampled_atoms: int, scale: int = 1
) -> Iterator[ClauseTheory]:
    yield from small_theories(exhaustive_atoms)
    rng = random.Random(config.seed)
    for _ in range(config.samples * scale):
        yield random_theory(rng, sampled_atoms)


# Suíte foundedness


def check_closure_laws(config: RunConfig) -> Report:
    """Dualidade árvore/monótono, sanduíche e idempotência das quatro operações"""
    universe = _universe(config)
    tally = Tally("closure-laws", "foundedness", universe.describe())
    operations = (down_arborify, up_monotonise, up_arborify, down_monotonise)
    for T in _predicates(config):
        ok = (
            is_tree(T) == is_monotone(T.complement())
            and down_arborify(T).issubset(T)
            and T.issubset(up_monotonise(T))
            and is_tree(down_arborify(T))
            and is_monotone(up_monotonise(T))
            and all(op(op(T)) == op(T) for op in operations)
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_tree_unbounded(config: RunConfig) -> Report:
    """
    Árvores: caminhos ilimitados ⇔ infinita por estágios
    Monótonos: uniformemente barrado ⇔ barrado por estágios
    """
    universe = _universe(config)
    tally = Tally("tree-unbounded", "foundedness", universe.describe())
    for T in _predicates(config):
        ok = True
        if is_tree(T):
            ok = has_unbounded_paths(T) == is_staged_infinite(T)
        if ok and is_monotone(T):
            ok = is_uniformly_barred(T) == is_staged_barred(T)
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_pruning_spread(config: RunConfig) -> Report:
    """
    Produtivo ⇒ a poda é um spread
    Indutivamente barrado ⇒ o fecho hereditário é barricado e hereditário
    """
    universe = _universe(config)
    tally = Tally("productive-pruning-spread", "foundedness", universe.describe())
    b = config.boundary
    for T in _predicates(config):
        ok = True
        if is_productive(T, b):
            ok = is_spread(pruning(T, b))
        if ok and is_inductively_barred(T, b):
            closure = hereditary_closure(T, b)
            ok = is_barricaded(closure) and is_hereditary(closure)
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_spread_productive(config: RunConfig) -> Report:
    """Produtivo ⇔ contém um spread; indutivamente barrado ⇔ todo U ⊇ T é barricado"""
    universe = _universe(config)
    tally = Tally("spread-productive", "foundedness", universe.describe())
    if config.boundary is Boundary.CLOSED:
        return tally.skip(CLOSED_NOTE)

    # Spreads minimais são as cadeias de um ramo; seus complementos são os
    # predicados não barricados maximais
    chains = [
        chain_predicate(universe, values)
        for values in itertools.product(
            universe.alphabet.elements(), repeat=universe.depth
        )
    ]
    if not all(is_spread(c) and not is_barricaded(c.complement()) for c in chains):
        tally.record(False, "cadeias")
        return tally.report()

    for T in _predicates(config):
        contains_spread = any(c.issubset(T) for c in chains)
        all_barricaded = not any(T.issubset(c.complement()) for c in chains)
        ok = contains_spread == is_productive(T) and (
            all_barricaded == is_inductively_barred(T)
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_productive_unbounded(config: RunConfig) -> Report:
    """Produtivo ⇔ caminhos ilimitados; indutivamente barrado ⇔ uniformemente barrado"""
    universe = _universe(config)
    tally = Tally("productive-unbounded", "foundedness", universe.describe())
    if config.boundary is Boundary.CLOSED:
        return tally.skip(CLOSED_NOTE)
    for T in _predicates(config):
        ok = is_productive(T) == has_unbounded_paths(T) and (
            is_inductively_barred(T) == is_uniformly_barred(T)
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_converse(config: RunConfig) -> Report:
    universe = _universe(config)
    tally = Tally("converse", "foundedness", universe.describe())
    if config.boundary is Boundary.CLOSED:
        return tally.skip(CLOSED_NOTE)
    for T in _predicates(config):
        ok = (not is_inductively_barred(T) or is_barred(T)) and (
            not has_infinite_branch(T) or is_productive(T)
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_classify_witnesses(config: RunConfig) -> Report:
    """Toda testemunha produzida pela classificação é reverificada"""
    universe = _universe(config)
    tally = Tally("classify-witnesses", "foundedness", universe.describe())
    for T in _predicates(config):
        reports = classify(T, config.boundary)
        bad = next(
            (name for name, r in reports.items() if not verify_witness(T, r)), None
        )
        tally.record(bad is None, {"predicate": T.to_texts(), "property": bad})
    return tally.report(_predicates_note(config))


def _itree_height(config: RunConfig) -> int:
    """Maior altura h <= d cuja enumeração de árvores cabe em MAX_ITREES"""
    count, height = 1, 0
    while height < config.depth:
        nxt = 1 + count**config.alphabet
        if nxt > MAX_ITREES:
            break
        count, height = nxt, height + 1
    return height


def check_realisers(config: RunConfig) -> Report:
    """Cada árvore intensional realiza sua versão extensional, bem fundada em d"""
    universe = _universe(config)
    tally = Tally("realisers", "foundedness", universe.describe())
    height = _itree_height(config)
    for t in all_itrees(universe.alphabet, height):
        extensional = itree_to_extensional(t, universe)
        tally.record(
            realises(t, extensional) and is_well_founded_at(t, universe), repr(t)
        )
    return tally.report(f"árvores de altura <= {height}")


# Suíte kl-ft


def check_spread_prod(config: RunConfig) -> Report:
    """
    DC^productive em T equivale a DC^spread na poda de T, e BI^ind em T
    equivale a BI^barricaded no fecho hereditário de T
    """
    universe = _universe(config)
    tally = Tally("spread-prod", "kl-ft", universe.describe())
    b = config.boundary
    for T in _predicates(config):
        dc_prod = check_principle("DC^productive", T, b)
        dc_spread = check_principle("DC^spread", pruning(T, b), b)
        bi_ind = check_principle("BI^ind", T, b)
        bi_barricaded = check_principle("BI^barricaded", hereditary_closure(T, b), b)
        ok = (
            dc_prod.holds
            and dc_spread.holds
            and bi_ind.holds
            and bi_barricaded.holds
            and dc_prod.detail["hypothesis"] == dc_spread.detail["hypothesis"]
            and (not dc_spread.detail["conclusion"] or dc_prod.detail["conclusion"])
            and bi_ind.detail["conclusion"] == bi_barricaded.detail["conclusion"]
            and (not bi_ind.detail["hypothesis"] or bi_barricaded.detail["hypothesis"])
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_kl_ft_variants(config: RunConfig) -> Report:
    """
    KL^staged em ⌄T tem a hipótese e a conclusão de KL^unbounded em T, e
    FT^staged em ↑T as de FT^uniform em T
    """
    universe = _universe(config)
    tally = Tally("kl-ft-variants", "kl-ft", universe.describe())
    b = config.boundary
    for T in _predicates(config):
        pairs = (
            (
                check_principle("KL^staged", down_arborify(T), b),
                check_principle("KL^unbounded", T, b),
            ),
            (
                check_principle("FT^staged", up_monotonise(T), b),
                check_principle("FT^uniform", T, b),
            ),
        )
        ok = all(
            staged.holds
            and other.holds
            and staged.detail["hypothesis"] == other.detail["hypothesis"]
            and staged.detail["conclusion"] == other.detail["conclusion"]
            for staged, other in pairs
        )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_principles(config: RunConfig) -> Report:
    """Os doze princípios valem em toda instância, com testemunhas verificadas"""
    universe = _universe(config)
    tally = Tally("principles", "kl-ft", universe.describe())
    for T in _predicates(config):
        failing: Optional[str] = None
        for name in PRINCIPLES:
            report = check_principle(name, T, config.boundary)
            if not report.holds or not verify_witness(T, report):
                failing = name
                break
        tally.record(
            failing is None, {"predicate": T.to_texts(), "principle": failing}
        )
    return tally.report(f"{len(PRINCIPLES)} princípios; {_predicates_note(config)}")


# Suíte dc-bi


def check_relation_predicates(config: RunConfig) -> Report:
    """chaining = ⌄alinhamento e antichaining = ↑bloqueios"""
    universe = _universe(config)
    tally = Tally("relation-predicates", "dc-bi", universe.describe())
    for R in _hom_relations(config):
        for b0 in universe.alphabet.elements():
            aligned = alignment(R, b0, universe)
            blocked = blockings(R, b0, universe)
            ok = chaining(R, b0, universe) == down_arborify(aligned) and (
                antichaining(R, b0, universe) == up_monotonise(blocked)
            )
            tally.record(ok, {"relation": R.table, "b0": b0})
    return tally.report()


def check_dc_serial(config: RunConfig) -> Report:
    """R serial ⇒ o alinhamento a partir de b0 é produtivo e tem ramo"""
    universe = _universe(config)
    tally = Tally("dc-serial", "dc-bi", universe.describe())
    open_boundary = config.boundary is Boundary.OPEN
    for R in _hom_relations(config):
        for b0 in universe.alphabet.elements():
            report = check_DC_serial(R, b0, universe.depth)
            aligned = alignment(R, b0, universe)
            ok = report.holds
            if ok and open_boundary and is_serial(R):
                ok = is_productive(aligned)
            if ok and report.witness is not None:
                ok = all(u in aligned for u in report.witness.prefixes())
            tally.record(
                ok,
                {"relation": R.table, "b0": b0},
                witness_to_payload(report.witness),
            )
    return tally.report()


def check_dc_transport(config: RunConfig) -> Report:
    """T produtivo ⇒ R_T serial abaixo de d e o ramo transportado fica em T"""
    universe = _universe(config)
    tally = Tally("dc-transport", "dc-bi", universe.describe())
    b = config.boundary
    for T in _predicates(config):
        ok = True
        if is_productive(T, b):
            rel = reverse_relation(T, b)
            branch = transport_branch(T, b)
            ok = (
                is_serial_below_depth(rel, universe.depth)
                and branch is not None
                and all(u in T for u in branch.prefixes())
            )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config))


def check_bi_least(config: RunConfig) -> Report:
    """Bloqueios barrados ⇒ R tem elemento mínimo"""
    universe = _universe(config)
    tally = Tally("bi-least", "dc-bi", universe.describe())
    for R in _hom_relations(config):
        for b0 in universe.alphabet.elements():
            report = check_BI_least(R, b0, universe.depth)
            tally.record(report.holds, {"relation": R.table, "b0": b0})
    return tally.report()


def check_ordered_encodings(config: RunConfig) -> Report:
    """
    ‖lift(T)‖ = T, ord(u) ∈ lift(T) ⇔ u ∈ T, estabilidade de ‖·‖ sobre os
    fechos de lift(T) e os lemas de transporte a partir de B*
    """
    universe = _universe(config)
    tally = Tally("ordered-encodings", "dc-bi", universe.describe())
    if config.boundary is Boundary.CLOSED:
        return tally.skip(CLOSED_NOTE)
    for T in _predicates(config, ENCODING_EXHAUSTIVE_NODES):
        lifted = lift(T)
        ok = ordered(lifted, universe) == T and all(
            (ord_approx(u) in lifted) == (u in T) for u in universe.sequences()
        )
        if ok:
            tree = down_arborify(T)
            tree_up = approx_up_arborify(lift(tree))
            ok = (
                ordered(tree_up, universe) == tree
                and is_productive(tree) == approximable(tree_up)
                and (find_branch(tree) is None)
                == (find_choice_function(tree_up) is None)
            )
        if ok:
            mono = up_monotonise(T)
            mono_up = approx_up_monotonise(lift(mono))
            ok = (
                ordered(mono_up, universe) == mono
                and is_barred(mono) == barred(mono_up)
                and is_inductively_barred(mono) == inductively_barred(mono_up)
            )
        tally.record(ok, T.to_texts())
    return tally.report(_predicates_note(config, ENCODING_EXHAUSTIVE_NODES))


def random_partial_function(rng: random.Random, domain: int, codomain: int) -> Key:
    values = [rng.randrange(-1, codomain) for _ in range(domain)]
    return tuple((a, b) for a, b in enumerate(values) if b >= 0)


def _approx_generators(config: RunConfig) -> Iterator[List[Key]]:
    """Conjuntos de funções parciais d ⇀ B, todos ou amostrados"""
    if (config.alphabet + 1) ** config.depth <= MAX_GENERATOR_KEYS:
        keys = functional_keys(config.depth, Alphabet(config.alphabet))
        for chosen in itertools.product((False, True), repeat=len(keys)):
            yield [k for k, keep in zip(keys, chosen) if keep]
        return
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        yield [
            random_partial_function(rng, config.depth, config.alphabet)
            for _ in range(rng.randint(1, 4))
        ]


def check_ordered_transport(config: RunConfig) -> Report:
    """
    Para T sobre d × B fechado por restrição: aproximável ⇔ ‖T‖ produtivo e
    função escolha ⇔ ramo em ‖T‖. Fechado por extensão: T barrado ⇔ ‖T‖
    barrado, e o mesmo para barra indutiva
    """
    universe = _universe(config)
    tally = Tally("ordered-transport", "dc-bi", universe.describe())
    if config.boundary is Boundary.CLOSED:
        return tally.skip(CLOSED_NOTE)
    exhaustive = (config.alphabet + 1) ** config.depth <= MAX_GENERATOR_KEYS
    for generators in _approx_generators(config):
        table = ApproxPred.from_table(
            universe.depth, universe.alphabet, (Approx(k) for k in generators)
        )
        tree = approx_up_arborify(table)
        mono = approx_up_monotonise(table)
        tree_ordered = ordered(tree, universe)
        mono_ordered = ordered(mono, universe)
        ok = (
            approximable(tree) == is_productive(tree_ordered)
            and (find_choice_function(tree) is None)
            == (find_branch(tree_ordered) is None)
            and barred(mono) == is_barred(mono_ordered)
            and inductively_barred(mono) == is_inductively_barred(mono_ordered)
        )
        tally.record(ok, {"generators": [[list(p) for p in k] for k in generators]})
    return tally.report("exaustivo" if exhaustive else _sample_note(config))


# Suíte cc-ac


def check_cc_wbi(config: RunConfig) -> Report:
    """CC e WBI em toda relação A × B com |A| = d, comparados com DC e BI^ind"""
    universe = _universe(config)
    tally = Tally("cc-wbi", "cc-ac", universe.describe())
    if config.alphabet * config.depth > MAX_HET_PAIRS:
        return tally.skip(f"mais de {MAX_HET_PAIRS} pares em A × B")
    for R in all_het_relations(universe.depth, universe.alphabet):
        ok = (
            check_CC(R).holds
            and check_WBI(R).holds
            and cc_agrees_with_dc(R)
            and wbi_agrees_with_bi(R)
        )
        tally.record(ok, {"relation": R.table})
    return tally.report()


def check_ac(config: RunConfig) -> Report:
    """AC e co-AC em toda relação com |A|, |B| <= 3, comparados com GDC e GBI"""
    tally = Tally("ac", "cc-ac", "|A|, |B| <= 3")
    for m, n in itertools.product(range(1, 4), repeat=2):
        for R in all_het_relations(m, Alphabet(n)):
            ac, coac = check_AC(R), check_coAC(R)
            agreements = {**ac.detail, **coac.detail}
            ok = (
                ac.holds
                and coac.holds
                and all(
                    value
                    for key, value in agreements.items()
                    if key not in ("hypothesis", "conclusion")
                )
            )
            tally.record(ok, {"m": m, "n": n, "relation": R.table})
    return tally.report()


# Suíte gdc-gbi


def _table_payload(T: ApproxPred) -> List[List[List[int]]]:
    return [[list(pair) for pair in key] for key in T.members()]


def _functional_tables(m: int, n: int) -> Iterator[ApproxPred]:
    codomain = Alphabet(n)
    keys = functional_keys(m, codomain)
    for chosen in itertools.product((False, True), repeat=len(keys)):
        yield ApproxPred.from_table(
            m, codomain, (Approx(k) for k, keep in zip(keys, chosen) if keep)
        )


def check_gdc_gbi(config: RunConfig) -> Report:
    """GDC e GBI em toda tabela de aproximações funcionais com |A|, |B| <= 2"""
    tally = Tally("gdc-gbi", "gdc-gbi", "|A|, |B| <= 2")
    for m, n in itertools.product(range(1, 3), repeat=2):
        for T in _functional_tables(m, n):
            gdc, gbi = check_GDC(T), check_GBI(T)
            ok = gdc.holds and gbi.holds
            if ok and gdc.witness is not None:
                ok = is_choice_function(T, gdc.witness)
            if ok and gbi.detail["conclusion"]:
                ok = check_bar_derivation(T, gbi.witness)
            counterexample = {"m": m, "n": n, "table": _table_payload(T)}
            tally.record(ok, counterexample, witness_to_payload(gdc.witness))
    return tally.report()


def check_similarity_invariance(config: RunConfig) -> Report:
    """Pertinência e pontos fixos não mudam com permutação e repetição de pares"""
    tally = Tally("similarity-invariance", "gdc-gbi", "|A|, |B| <= 3")
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        codomain = Alphabet(n)
        keys = functional_keys(m, codomain)
        T = ApproxPred.from_table(
            m, codomain, (Approx(k) for k in keys if rng.random() < 0.6)
        )
        pairs = [(rng.randrange(m), rng.randrange(n)) for _ in range(rng.randint(0, m))]
        shuffled = list(pairs)
        if pairs and rng.random() < 0.5:
            shuffled.append(rng.choice(pairs))
        rng.shuffle(shuffled)
        v, w = Approx(tuple(pairs)), Approx(tuple(shuffled))
        ok = (
            (v in T) == (w in T)
            and approximable_from(T, v) == approximable_from(T, w)
            and inductively_barred_from(T, v) == inductively_barred_from(T, w)
        )
        tally.record(ok, {"v": str(v), "w": str(w), "table": _table_payload(T)})
    return tally.report(_sample_note(config))


def check_approx_closures(config: RunConfig) -> Report:
    """⌄T ⊆ T ⊆ ↑T e T contido no fecho por superconjuntos, |A|, |B| <= 2"""
    tally = Tally("approx-closures", "gdc-gbi", "|A|, |B| <= 2")
    for m, n in itertools.product(range(1, 3), repeat=2):
        keys = functional_keys(m, Alphabet(n))
        for T in _functional_tables(m, n):
            down = approx_down_arborify(T)
            up = approx_up_monotonise(T)
            above = approx_up_arborify(T)
            ok = all(
                (not down.contains_key(k) or T.contains_key(k))
                and (not T.contains_key(k) or up.contains_key(k))
                and (not T.contains_key(k) or above.contains_key(k))
                for k in keys
            )
            tally.record(ok, {"m": m, "n": n, "table": _table_payload(T)})
    return tally.report()


def check_pigeonhole(config: RunConfig) -> Report:
    """Injetividade com m > n: aproximável até n, sem função escolha"""
    tally = Tally("pigeonhole", "gdc-gbi", "(m, n) em {(2,1), (3,2), (4,3)}")
    for m, n in ((2, 1), (3, 2), (4, 3)):
        report = pigeonhole_demo(m, n)
        tally.record(
            report.max_size == n and report.choice_function is None,
            {"m": m, "n": n, "max_size": report.max_size},
            witness_to_payload(report),
        )
    return tally.report()


def check_binary_encoding(config: RunConfig) -> Report:
    """Codificar B = 3 em bits preserva funções escolha; aproximabilidade é relatada"""
    tally = Tally("binary-encoding", "gdc-gbi", "|A| <= 2, |B| = 3")
    rng = random.Random(config.seed)
    codomain = Alphabet(3)
    mismatches = 0
    for _ in range(min(config.samples, 500)):
        m = rng.randint(1, 2)
        keys = functional_keys(m, codomain)
        T = ApproxPred.from_table(
            m, codomain, (Approx(k) for k in keys if rng.random() < 0.7)
        )
        agreement = encoding_agreement(T)
        if agreement["approximable"] != agreement["approximable_encoded"]:
            mismatches += 1
        tally.record(
            agreement["choice"] == agreement["choice_encoded"], _table_payload(T)
        )
    logger.info(f"Codificação binária: aproximabilidade divergiu em {mismatches}")
    return tally.report(f"aproximabilidade divergiu em {mismatches} instâncias")


# Suíte completeness

SPLIT_MODES = ((False, False), (True, False), (False, True))

# Teorias sorteadas por instância de `samples` na verificação do provador
PROVER_SAMPLE_SCALE = 10


def check_prover(config: RunConfig) -> Report:
    """Provador por divisão contra enumeração de modelos, nos três modos de escolha"""
    tally = Tally("prover", "completeness", "|A| <= 3, até 4 cláusulas")
    for T in _theories(config, 1, 3, PROVER_SAMPLE_SCALE):
        model = find_model_bruteforce(T)
        ok = True
        for heuristic, unit in SPLIT_MODES:
            prover = Prover(T, heuristic, unit)
            derivation = prover.derive(Sequent())
            countermodel = prover.countermodel(Sequent())
            if (derivation is None) != (model is not None):
                ok = False
            elif derivation is not None and not check_derivation(T, derivation):
                ok = False
            elif countermodel is not None and not satisfies(countermodel, T):
                ok = False
        tally.record(ok, theory_to_document(T))
    drawn = config.samples * PROVER_SAMPLE_SCALE
    return tally.report(f"amostra de {drawn} (semente {config.seed})")


def check_completeness_coincidence(config: RunConfig) -> Report:
    """Provador e motores de aproximação coincidem, com testemunhas cruzadas"""
    tally = Tally("completeness", "completeness", "|A| <= 4")
    for T in _theories(config, 2, 4):
        report = check_completeness(T, config.heuristic)
        tally.record(report.holds, theory_to_document(T))
    return tally.report("exaustivo |A| <= 2 com cláusulas disjuntas; amostra |A| <= 4")


def check_sequents(config: RunConfig) -> Report:
    """
    Para todo sequente disjunto: derivável ⇔ indutivamente barrado a partir da
    tradução, derivável ⇒ válido em todo modelo, e o enfraquecimento preserva
    derivabilidade
    """
    tally = Tally("sequents", "completeness", "|A| <= 3")
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        T = random_theory(rng, 3)
        prover = Prover(T, config.heuristic, config.unit_propagation)
        approx = theory_as_approx(T)
        models = [alpha for alpha in all_valuations(T.size) if satisfies(alpha, T)]
        derivable = {
            s: prover.derive(s) is not None for s in disjoint_sequents(T.size)
        }
        bad: Optional[Sequent] = None
        for s, verdict in derivable.items():
            if verdict != inductively_barred_from(approx, translate(s)):
                bad = s
            elif verdict and not all(sequent_holds_in(alpha, s) for alpha in models):
                bad = s
            elif verdict and not all(derivable[w] for w in derivable if s.subsumes(w)):
                bad = s
            if bad is not None:
                break
        tally.record(
            bad is None,
            {
                "theory": theory_to_document(T),
                "sequent": witness_to_payload(bad, T.atoms),
            },
        )
    return tally.report(_sample_note(config))


# Suíte bpf


def check_bpf(config: RunConfig) -> Report:
    """BPF, BPI e contrapositivas em teorias de cláusulas disjuntas"""
    tally = Tally("bpf", "bpf", "|A| <= 2 exaustivo, |A| <= 3 amostrado")
    rng = random.Random(config.seed)
    sampled = (random_theory(rng, 3) for _ in range(min(config.samples, 200)))
    checks = (check_BPF, check_BPI, check_coBPF, check_coBPI)
    for T in itertools.chain(small_theories(2), sampled):
        failing = next((c.__name__ for c in checks if not c(T).holds), None)
        tally.record(
            failing is None, {"theory": theory_to_document(T), "check": failing}
        )
    return tally.report()


def check_filter_roundtrip(config: RunConfig) -> Report:
    """𝒯_{F_𝒯} deriva o mesmo que 𝒯; filtros principais geram teorias coerentes"""
    tally = Tally("filter-roundtrip", "bpf", "|A| <= 2")
    for T in small_theories(2):
        tally.record(check_roundtrip(T).holds, theory_to_document(T))
    for size in range(3):
        algebra = FreeAlgebra([f"p{i}" for i in range(size)])
        for e in algebra.elements():
            F = GeneratedFilter(algebra, [e])
            ok = verify_filter(algebra, F) and check_filter_theory(F).holds
            tally.record(ok, {"generators": size, "principal": e.to_text()})
    return tally.report()


def check_prime_models(config: RunConfig) -> Report:
    """Filtros e ideais induzidos por valorações são primos, |A| <= 3"""
    tally = Tally("prime-models", "bpf", "|A| <= 3")
    for size in range(4):
        algebra = FreeAlgebra([f"p{i}" for i in range(size)])
        for alpha in all_valuations(size):
            prime_filter = prime_filter_from_model(algebra, alpha)
            prime_ideal = prime_ideal_from_model(algebra, alpha)
            ok = verify_prime(algebra, prime_filter, Polarity.FILTER) and (
                verify_prime(algebra, prime_ideal, Polarity.IDEAL)
            )
            tally.record(ok, list(alpha.values))
    return tally.report()


def random_expr(rng: random.Random, names: List[str], depth: int) -> BoolExpr:
    if depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.08:
            return Top()
        if roll < 0.16:
            return Bottom()
        return Var(rng.choice(names))
    kind = rng.randrange(3)
    if kind == 0:
        return Not(random_expr(rng, names, depth - 1))
    left = random_expr(rng, names, depth - 1)
    right = random_expr(rng, names, depth - 1)
    return And(left, right) if kind == 1 else Or(left, right)


def check_canon_homomorphism(config: RunConfig) -> Report:
    """canon respeita ∧, ∨, ¬, ⊤ e ⊥ e concorda com a avaliação direta"""
    tally = Tally("canon-homomorphism", "bpf", "|A| <= 8")
    rng = random.Random(config.seed)
    for _ in range(config.samples):
        names = [f"g{i}" for i in range(rng.randint(1, 8))]
        algebra = FreeAlgebra(names)
        e1, e2 = random_expr(rng, names, 4), random_expr(rng, names, 4)
        c1, c2 = algebra.canon(e1), algebra.canon(e2)
        k = rng.randrange(1 << len(names))
        env = {name: k >> i & 1 for i, name in enumerate(names)}
        ok = (
            algebra.canon(e1 & e2) == (c1 & c2)
            and algebra.canon(e1 | e2) == (c1 | c2)
            and algebra.canon(~e1) == ~c1
            and algebra.canon(Top()) == algebra.top
            and algebra.canon(Bottom()) == algebra.bottom
            and c1.value_at(k) == e1.evaluate(env)
        )
        tally.record(ok, {"left": str(e1), "right": str(e2)})
    return tally.report(_sample_note(config))


SUITES: Dict[str, List[Check]] = {
    "foundedness": [
        check_closure_laws,
        check_tree_unbounded,
        check_pruning_spread,
        check_spread_productive,
        check_productive_unbounded,
        check_converse,
        check_classify_witnesses,
        check_realisers,
    ],
    "dc-bi": [
        check_relation_predicates,
        check_dc_serial,
        check_dc_transport,
        check_bi_least,
        check_ordered_encodings,
        check_ordered_transport,
    ],
    "kl-ft": [check_spread_prod, check_kl_ft_variants, check_principles],
    "cc-ac": [check_cc_wbi, check_ac],
    "gdc-gbi": [
        check_gdc_gbi,
        check_similarity_invariance,
        check_approx_closures,
        check_pigeonhole,
        check_binary_encoding,
    ],
    "completeness": [check_prover, check_completeness_coincidence, check_sequents],
    "bpf": [
        check_bpf,
        check_filter_roundtrip,
        check_prime_models,
        check_canon_homomorphism,
    ],
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def suite_checks(name: str) -> List[Check]:
    """
    Verificações de uma suíte, em ordem estável

    Args:
        name (str): Nome da suíte ou "all"

    Returns:
        List[Check]: Funções de verificação
    """
    if name == "all":
        return [check for checks in SUITES.values() for check in checks]
    if name not in SUITES:
        raise UnknownSuiteError(
            f"Suíte desconhecida: {name}. Disponíveis: {', '.join(SUITE_NAMES)}"
        )
    return list(SUITES[name])
