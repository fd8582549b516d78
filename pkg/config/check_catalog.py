# config/check_catalog.py
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckCategory(Enum):
    MATRIX = "matrix"
    POLYNOMIAL = "polynomial"
    SERIES = "series"
    EXAMPLE = "example"
    ORACLE = "oracle"


@dataclass
class CheckRule:
    """Definizione di un check del catalogo"""
    check_id: str
    name: str
    description: str
    category: CheckCategory
    verifier: str
    enabled: bool = True
    metadata: Dict[str, Any] = None

    def __post_init__(self):
        if self.metadata is None:
            self.metadata = {}


def _rule(check_id: str, name: str, description: str, category: CheckCategory,
          verifier: str, **metadata: Any) -> CheckRule:
    return CheckRule(check_id, name, description, category, verifier, metadata=metadata)


_M, _P, _S, _E, _O = (CheckCategory.MATRIX, CheckCategory.POLYNOMIAL, CheckCategory.SERIES,
                      CheckCategory.EXAMPLE, CheckCategory.ORACLE)

# Catalogo in ordine canonico
_CATALOG: List[CheckRule] = [
    # Operatori tilde e polinomi di Eulero generalizzati
    _rule("T1", "Coniugio della riflessione con U~",
          "U~_n (1,-x) U~_n^-1 = (-1)^(n-1) J~_n", _M, "matrix"),
    _rule("T2", "Valutazione dei numeratori in 1",
          "alpha_n(1) = a_1^n e phi_n(1) = a_1^n (2n)!/n! sul catalogo", _P, "polynomial", n_max=8),
    _rule("T3", "Riduzione di grado per U~",
          "U~_n s = (1-x)^m (n-m)!/n! U~_(n-m) s per deg s < n-m", _M, "matrix"),
    _rule("T4", "Fattorizzazione di A^beta",
          "A_n^beta = V~^-1 D~ ((1+x)^(n beta),x)^T D~^-1 V~", _M, "matrix"),
    _rule("T5", "Forma chiusa dei GEP binomiali",
          "gep_closed_form = numeratore ordinario della serie binomiale generalizzata", _P, "polynomial", n_max=8),
    _rule("T6", "Coniugio della riflessione con F~",
          "F~_n E^n (1,-x) F~_n^-1 = (-1)^(n-1) J~_n", _M, "matrix"),
    _rule("T7", "Fattorizzazione di S~",
          "S~_n = V~_n^-1 C~_n V~_n", _M, "matrix"),
    _rule("T8", "Forma chiusa dei GNP binomiali",
          "gnp_closed_form = numeratore esponenziale della serie binomiale generalizzata", _P, "polynomial", n_max=8),
    _rule("T9", "Coniugio della riflessione con U",
          "U_n E (1,-x) U_n^-1 = (-1)^n J_n", _M, "matrix"),
    _rule("T10", "Riduzione di grado per U",
          "U_n s = (1-x)^m (n-m)!/n! U_(n-m) s per deg s <= n-m", _M, "matrix"),
    _rule("T11", "Coniugio della riflessione con F e ^BF",
          "F_n E^(n+1) (1,-x) F_n^-1 = (-1)^n J_n e ^BF_n E^(n-1) (1,-x) ^BF_n^-1 = (-1)^n J_n", _M, "matrix"),
    _rule("T12", "Fattorizzazione di S",
          "S_n = V_n^-1 C_n V_n", _M, "matrix"),
    _rule("T13", "Colonne chiuse di S",
          "colonne binomiali di S_n = colonne costruite", _M, "matrix"),
    _rule("T14", "Colonne chiuse di S^-1",
          "colonne binomiali di S_n^-1 = colonne costruite", _M, "matrix"),
    _rule("T15", "Inversione di beta per G e A",
          "G_n^-beta = J_n G_n^beta J_n e A_n^-beta = J~_n A_n^beta J~_n", _M, "matrix"),
    _rule("T16", "Fattorizzazione di G^beta",
          "G_n^beta = V_n^-1 ((1+x)^(n beta),x)^T V_n", _M, "matrix"),
    _rule("T17", "Colonne chiuse di G^beta",
          "colonne binomiali di G_n^beta = colonne costruite", _M, "matrix"),
    _rule("T18", "Inversione di beta per H",
          "H_n^-beta = J_n H_n^beta J_n", _M, "matrix"),
    _rule("T19", "Colonne chiuse di H^beta",
          "somme di t_m di H_n^beta e colonne d'angolo = colonne costruite", _M, "matrix"),
    _rule("T20", "Inversione di beta per T",
          "T_n^-beta = J~_n T_n^beta J~_n", _M, "matrix"),
    _rule("T21", "Colonne chiuse di T^beta",
          "somme di t_m di T_n^beta e colonne d'angolo = colonne costruite", _M, "matrix"),
    _rule("R1", "Relazioni di shift tra U e U~",
          "U~_n = (x,x)^T U_n (x,x) = U_n E (x,x) I_(n-1), analoghe per le inverse, M M^-1 = I",
          _M, "matrix"),
    _rule("R2", "Trasposta di (b, a^-1)",
          "entrate s_j(-i)/j! e diagonali in forma di Lagrange", _S, "lagrange"),

    # Esempi svolti
    _rule("EX1", "F_n su [x+n+1]_n",
          "F_n [x+n+1]_n = (2n)!/n!, phi~_n|C = (2n)!/n!, u~_n|C = [x+n+1]_(n-1)", _E, "example"),
    _rule("EX2", "Triangoli di (1+x, x(1+x))",
          "triangoli mostrati e ^B phi_n|1+x = (2n)!/(2 n!) (1+x) x^(n-1)", _E, "example"),
    _rule("EX3", "Triangoli della serie di Catalan",
          "triangoli mostrati e ^B alpha_n|C = sum C(-n,m) C(2n,n-m) x^m", _E, "example"),
    _rule("EX4", "Triangoli di (x(1+x))'",
          "triangoli mostrati e ^B alpha_n|1+x = (2-x) x^(n-1)", _E, "example"),
    _rule("EX5", "Numeratori per a = 1/(1-x)",
          "^B alpha_n = (1-(1-x)^(n+1))/x e numeratori di ((1-x)^-1, x(1-x))", _E, "example", n_max=8),
    _rule("EX6", "Combinazione di polinomi di Eulero",
          "^B alpha_n|e^x, numeratori di (1+x, x e^-x), identita' sulle colonne di F e ^BF", _E, "example"),
    _rule("EX7", "Prefattore della serie binomiale",
          "(b)a (1 + x(log (b)a^(b-1))') = 1 + x(log (b)a^b)'", _E, "example"),
    _rule("EX8", "Coincidenze sotto (1,-x)",
          "coincidenze tra array con beta, 1-beta, -beta e beta+1", _E, "example"),
    _rule("EX9", "Catena dei prefattori esponenziali",
          "catena di prefattori tra beta e beta-1 e coincidenza sotto (1,-x)", _E, "example"),

    # Identita' strutturali
    _rule("STIRLING", "Fattorizzazioni di Stirling",
          "U^-1 V^-1, V U e analoghi tilde in numeri di Stirling", _M, "matrix"),
    _rule("DUALBASIS", "Base duale",
          "sum (b)u_n(phi) (b)q_n(x) = 1/(1 - phi x) fino all'ordine", _S, "lagrange"),
    _rule("GFNARAYANA", "Funzione generatrice dei GNP",
          "sum phi_n(t) x^n/(n+1)! = (1-t) b(x(1-t)^2) su Q[t]", _P, "polynomial", n_max=6),
    _rule("COLSUM_A", "Somme di colonna di A^beta",
          "ogni colonna di A_n^beta somma a 1", _M, "matrix"),
    _rule("GROUPLAW_G", "Legge di gruppo di G^beta",
          "G_n^beta = sum C(n beta, m) X_n^m e I + X_n = G_n^(1/n)", _M, "matrix"),
    _rule("REDUCE_A", "Riduzione di A^beta",
          "((1-x)^-m,x) A_n^beta ((1-x)^m,x) = A_(n-m)^(n beta/(n-m))", _M, "matrix"),
    _rule("REDUCE_G", "Riduzione di G^beta",
          "((1-x)^-m,x) G_n^beta ((1-x)^m,x) = G_(n-m)^(n beta/(n-m))", _M, "matrix"),
    _rule("SUMID1", "Somma alternata con m^p",
          "sum (-1)^(n-m) C(2n+1,n-m) m^p C(m+n,n) = (-1)^(n+p) (n+1)^p", _P, "polynomial", n_max=8),
    _rule("SUMID2", "Somma alternata con (m+1)^p",
          "sum (-1)^(n-m) C(2n+1,n-m) (m+1)^p C(m+n,n) = (-1)^(n+p) n^p", _P, "polynomial", n_max=8),
    _rule("REVERSAL_GEP", "Inversione dei GEP",
          "numeratori di (b/a, 1/a) = (-1)^n J_n g_n, alpha di 1/a e variante di tipo B", _P, "polynomial"),
    _rule("REVERSAL_GNP", "Inversione dei GNP",
          "phi_n di (1, x a)^-1 = (-1)^n x J_n phi_n, forma con prefattore e tipo B", _P, "polynomial"),
    _rule("PSEUDOINV", "Pseudo-involuzioni",
          "(1,xa)^-1 = (1,xa(-x)) implica phi_n = x J_n phi_n", _P, "polynomial"),
    _rule("CATALOG_CONSISTENCY", "Coerenza del catalogo",
          "serie con nome contro le loro definizioni indipendenti", _S, "lagrange"),

    # Aggiunte
    _rule("DISPLAYED", "Matrici mostrate",
          "riproduzione esatta di ogni matrice tabulata", _M, "matrix"),
    _rule("EULER", "Polinomi di Eulero",
          "A_1..A_4 tabulati e A_n(1) = n!", _P, "polynomial", n_max=8),
    _rule("INTRO_PIPELINES", "Pipeline introduttive",
          "U~ u~ = alpha~, F~ u~ = phi~, S~ alpha~ = phi~, U s = g, F s = h, S g = h, ...", _P, "polynomial"),
    _rule("NARAYANA_CROSS", "Identita' incrociate di Narayana",
          "x S~_n x^0 = (n+1)! N_n e x (2n)!/n! S~_n^-1 x^0 = alpha_n|C", _P, "polynomial"),
    _rule("BETA_SHIFT", "Pipeline con beta",
          "G g = (b)g, H h = (b)h, A alpha~ = (b)alpha~, T phi~ = (b)phi~", _S, "lagrange"),
    _rule("LAGRANGE_FUNCEQ", "Equazioni funzionali",
          "(b)a(x a^-b) = a e a(x (b)a^b) = (b)a", _S, "lagrange"),
    _rule("LAGRANGE_EXTRACT", "Legge di estrazione",
          "[x^n](b)a^phi = phi/(phi+b n) [x^n] a^(phi+b n)", _S, "lagrange"),
    _rule("LAGRANGE_INVERSE", "Coppie inverse",
          "(1, x (b)a^phi)^-1 = (1, x (b-phi)a^-phi) e variante con prefattore", _S, "lagrange"),
    _rule("LAGRANGE_SHIFT", "Legge di shift",
          "(b)u~_n(x) = u~_n(x + n b) contro la serie associata", _S, "lagrange"),
    _rule("ORACLE_ARRAY", "Oracolo per entrate",
          "griglie materializzate = pipeline per valutazione, n <= 5", _O, "polynomial", n_max=5),
    _rule("REVERSION_ORACLE", "Oracolo di reversione",
          "reversione ordine per ordine = formula di Lagrange", _O, "polynomial"),
]

PREDEFINED_CHECKS: Dict[str, CheckRule] = {rule.check_id: rule for rule in _CATALOG}


def get_checks_for_category(category: CheckCategory) -> List[CheckRule]:
    """Ritorna tutti i check di una categoria"""
    return [rule for rule in PREDEFINED_CHECKS.values() if rule.category == category]


def get_enabled_checks() -> List[CheckRule]:
    """Ritorna tutti i check abilitati"""
    return [rule for rule in PREDEFINED_CHECKS.values() if rule.enabled]


def get_check_by_id(check_id: str) -> Optional[CheckRule]:
    """Ritorna un check specifico per ID"""
    return PREDEFINED_CHECKS.get(check_id)


def all_check_ids() -> List[str]:
    """ID in ordine di catalogo"""
    return [rule.check_id for rule in _CATALOG]
