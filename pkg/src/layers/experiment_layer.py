"""
EXPERIMENT LAYER - Camada de Experimentos
Responsável por varrer (n, p_has, trial), resolver cada instância com todos
os algoritmos, certificar os códigos e analisar os ganhos com pandas
"""

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator
from tqdm import tqdm

from src.config import get_settings
from src.core.generators import gen_random
from src.layers.business_layer import ALGORITHMS, UCIC_PREFIX, BusinessLayer, parse_algorithm

CSV_HEADER = ["n", "p_has", "algorithm", "trial", "seed", "ell", "coding_gain", "fallback_used"]


class ExperimentSpec(BaseModel):
    """Grade do experimento"""

    n_values: List[int] = Field(default_factory=lambda: [20, 30, 40, 50, 60])
    p_has_values: List[float] = Field(default_factory=lambda: [0.05, 0.1])
    trials: int = Field(100, ge=1)
    algorithms: List[str] = Field(default_factory=lambda: list(ALGORITHMS))
    base_seed: int = Field(0, ge=0)

    @field_validator("algorithms")
    @classmethod
    def _known(cls, value: List[str]) -> List[str]:
        for name in value:
            parse_algorithm(name)
        return value


class ExperimentRow(BaseModel):
    """Uma linha do CSV: um algoritmo sobre uma instância"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    p_has: float
    algorithm: str
    trial: int
    seed: int
    ell: int
    coding_gain: Fraction
    fallback_used: bool
    valid: bool = True

    def sort_key(self) -> Tuple[int, float, int, str]:
        return (self.n, self.p_has, self.trial, self.algorithm)


class SignTestResult(BaseModel):
    """Teste do sinal unilateral: UCIC-X melhor que X?"""

    baseline: str
    ucic: str
    positive: int
    negative: int
    ties: int
    p_value: float


def run_trial(n: int, p_has: float, trial: int, seed: int, algorithms: List[str]) -> List[ExperimentRow]:
    """
    Resolve uma instância com todos os algoritmos (função de módulo para o pool)

    Raises:
        InvalidCodeProduced: Algum código não decodifica
    """
    inst = gen_random(n, p_has, seed)
    business = BusinessLayer()
    rows = []
    for algorithm in algorithms:
        result = business.execute(inst, algorithm)
        rows.append(ExperimentRow(
            n=n,
            p_has=p_has,
            algorithm=algorithm,
            trial=trial,
            seed=seed,
            ell=result.ell,
            coding_gain=result.coding_gain,
            fallback_used=result.fallback_used,
            valid=result.report.valid,
        ))
    return rows


def _run_trial_task(task: Tuple[int, float, int, int, List[str]]) -> List[ExperimentRow]:
    return run_trial(*task)


def sign_test_p_value(positive: int, negative: int) -> float:
    """P(X >= positive) com X ~ Binomial(positive + negative, 1/2)"""
    total = positive + negative
    if total == 0:
        return 1.0
    tail = sum(math.comb(total, i) for i in range(positive, total + 1))
    return tail / 2 ** total


class ExperimentLayer:
    """Executa e analisa experimentos de coding gain"""

    def __init__(self, workers: Optional[int] = None, progress: bool = True, verbose: bool = False):
        """
        Inicializa a camada de experimentos

        Args:
            workers: Processos paralelos por trial (default da configuração)
            progress: Mostra a barra do tqdm
            verbose: Imprime o progresso das etapas
        """
        self.workers = get_settings().experiment_workers if workers is None else workers
        self.progress = progress
        self.verbose = verbose

    def run(self, spec: ExperimentSpec) -> List[ExperimentRow]:
        """
        Roda a grade completa

        Args:
            spec: ExperimentSpec validado

        Returns:
            Linhas ordenadas por (n, p_has, trial, algorithm)
        """
        tasks = [
            (n, p_has, trial, spec.base_seed + trial, list(spec.algorithms))
            for n in spec.n_values
            for p_has in spec.p_has_values
            for trial in range(spec.trials)
        ]

        rows: List[ExperimentRow] = []
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = pool.map(_run_trial_task, tasks)
                for chunk in tqdm(results, total=len(tasks), desc="   Trials", disable=not self.progress):
                    rows.extend(chunk)
        else:
            for task in tqdm(tasks, desc="   Trials", disable=not self.progress):
                rows.extend(_run_trial_task(task))

        return sorted(rows, key=ExperimentRow.sort_key)

    def to_dataframe(self, rows: List[ExperimentRow]) -> pd.DataFrame:
        """DataFrame com ganho numérico (float) para análise"""
        if not rows:
            return pd.DataFrame(columns=CSV_HEADER + ["valid"])
        df = pd.DataFrame([row.model_dump(exclude={"coding_gain"}) for row in rows])
        df["coding_gain"] = [float(row.coding_gain) for row in rows]
        return df

    def to_csv(self, rows: List[ExperimentRow]) -> str:
        """
        CSV com cabeçalho fixo; ganho com 4 casas decimais

        Args:
            rows: Linhas já ordenadas

        Returns:
            Texto CSV (byte a byte idêntico para o mesmo spec)
        """
        df = pd.DataFrame(
            [
                {
                    "n": row.n,
                    "p_has": f"{row.p_has:g}",
                    "algorithm": row.algorithm,
                    "trial": row.trial,
                    "seed": row.seed,
                    "ell": row.ell,
                    "coding_gain": f"{float(row.coding_gain):.4f}",
                    "fallback_used": "true" if row.fallback_used else "false",
                }
                for row in rows
            ],
            columns=CSV_HEADER,
        )
        return df.to_csv(index=False, lineterminator="\n")

    def summarize(self, df: pd.DataFrame) -> pd.DataFrame:
        """
        Média e desvio do ganho por (n, p_has, algorithm)

        Args:
            df: DataFrame de to_dataframe

        Returns:
            DataFrame com colunas n, p_has, algorithm, mean_gain, std_gain, mean_ell, trials
        """
        grouped = df.groupby(["n", "p_has", "algorithm"]).agg({
            "coding_gain": ["mean", "std"],
            "ell": ["mean", "count"],
        }).reset_index()
        grouped.columns = ["n", "p_has", "algorithm", "mean_gain", "std_gain", "mean_ell", "trials"]
        return grouped

    def _paired(self, df: pd.DataFrame, baseline: str, ucic: str) -> pd.DataFrame:
        keys = ["n", "p_has", "trial"]
        left = df[df["algorithm"] == baseline][keys + ["ell", "coding_gain"]]
        right = df[df["algorithm"] == ucic][keys + ["ell", "coding_gain"]]
        return left.merge(right, on=keys, suffixes=("_base", "_ucic"))

    def dominance_violations(self, df: pd.DataFrame) -> pd.DataFrame:
        """Pares em que ℓ(ucic-X) > ℓ(X) (deve ser vazio)"""
        frames = []
        for algorithm in sorted(df["algorithm"].unique()):
            if algorithm.startswith(UCIC_PREFIX):
                continue
            ucic = UCIC_PREFIX + algorithm
            if ucic not in set(df["algorithm"]):
                continue
            paired = self._paired(df, algorithm, ucic)
            bad = paired[paired["ell_ucic"] > paired["ell_base"]].copy()
            bad["baseline"] = algorithm
            frames.append(bad)
        if not frames:
            return pd.DataFrame()
        return pd.concat(frames, ignore_index=True)

    def sign_test(self, df: pd.DataFrame, baseline: str, n: Optional[int] = None,
                  p_has: Optional[float] = None) -> SignTestResult:
        """
        Teste do sinal unilateral sobre as diferenças por trial

        Args:
            df: DataFrame de to_dataframe
            baseline: Algoritmo X (compara com ucic-X)
            n: Filtra um n (opcional)
            p_has: Filtra um p_has (opcional)

        Returns:
            SignTestResult com contagens e p-valor
        """
        ucic = UCIC_PREFIX + baseline
        paired = self._paired(df, baseline, ucic)
        if n is not None:
            paired = paired[paired["n"] == n]
        if p_has is not None:
            paired = paired[paired["p_has"] == p_has]
        diff = paired["coding_gain_ucic"] - paired["coding_gain_base"]
        positive = int((diff > 0).sum())
        negative = int((diff < 0).sum())
        return SignTestResult(
            baseline=baseline,
            ucic=ucic,
            positive=positive,
            negative=negative,
            ties=int((diff == 0).sum()),
            p_value=sign_test_p_value(positive, negative),
        )

    def save_csv(self, rows: List[ExperimentRow], output_path: str) -> None:
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        Path(output_path).write_text(self.to_csv(rows), encoding="utf-8")
        if self.verbose:
            print(f"   💾 CSV salvo em: {output_path}")

    def save_to_excel(self, df: pd.DataFrame, output_path: str) -> None:
        """
        Salva linhas e resumo em Excel (abas 'linhas' e 'resumo')

        Args:
            df: DataFrame de to_dataframe
            output_path: Caminho do arquivo .xlsx
        """
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        with pd.ExcelWriter(output_path, engine="openpyxl") as writer:
            df.to_excel(writer, sheet_name="linhas", index=False)
            self.summarize(df).to_excel(writer, sheet_name="resumo", index=False)
        if self.verbose:
            print(f"   💾 Excel salvo em: {output_path}")

    def execute(self, spec: ExperimentSpec, output_path: Optional[str] = None,
                excel_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Executa o processo completo da camada EXPERIMENT

        Args:
            spec: Grade do experimento
            output_path: CSV de saída (opcional)
            excel_path: Excel de saída (opcional)

        Returns:
            Dicionário com rows, dataframe, resumo, violações e testes do sinal
        """
        if self.verbose:
            print("🔄 [EXPERIMENT LAYER] Iniciando experimento...")
            print(f"   📊 n={spec.n_values} p_has={spec.p_has_values} trials={spec.trials}")

        rows = self.run(spec)
        df = self.to_dataframe(rows)
        violations = self.dominance_violations(df)
        tests = [
            self.sign_test(df, name)
            for name in spec.algorithms
            if not name.startswith(UCIC_PREFIX) and UCIC_PREFIX + name in spec.algorithms
        ]

        if output_path:
            self.save_csv(rows, output_path)
        if excel_path:
            self.save_to_excel(df, excel_path)

        if self.verbose:
            print(f"✅ [EXPERIMENT LAYER] {len(rows)} linhas geradas")
            if len(violations):
                print(f"   ⚠️  {len(violations)} violações de dominância")
            for test in tests:
                print(f"   📈 {test.ucic} vs {test.baseline}: +{test.positive} -{test.negative} p={test.p_value:.2e}")

        return {
            "rows": rows,
            "dataframe": df,
            "summary": self.summarize(df) if len(df) else df,
            "violations": violations,
            "sign_tests": tests,
        }


# Função de conveniência para uso direto
def run_experiment(spec: ExperimentSpec) -> List[ExperimentRow]:
    """
    Função de conveniência para rodar um experimento sem barra de progresso

    Args:
        spec: Grade do experimento

    Returns:
        Linhas ordenadas
    """
    return ExperimentLayer(progress=False).run(spec)
