"""
BUSINESS LAYER - Camada de Negócio
Responsável por despachar o algoritmo pedido (baselines de partição ou UCIC),
traduzir o código de volta para a instância original e certificá-lo
"""

from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.core.codec import DecodeReport, verify_code_valid
from src.core.partition import PARTITIONERS, get_partitioner
from src.core.ucic import clique_partition_code, ucic_solve
from src.errors import InvalidCodeProduced, UnknownAlgorithm
from src.layers.trusted_layer import ReductionResult, TrustedLayer
from src.models.code import IndexCode, SolveTrace
from src.models.instance import Instance, coding_gain, format_gain

UCIC_PREFIX = "ucic-"
ALGORITHMS = tuple(PARTITIONERS) + tuple(UCIC_PREFIX + name for name in PARTITIONERS)


def parse_algorithm(name: str) -> Tuple[str, bool]:
    """
    Separa o nome do algoritmo em (partição, usa UCIC?)

    Raises:
        UnknownAlgorithm: Nome fora da lista
    """
    if name not in ALGORITHMS:
        raise UnknownAlgorithm(f"algoritmo desconhecido: {name!r} (disponíveis: {', '.join(ALGORITHMS)})")
    if name.startswith(UCIC_PREFIX):
        return name[len(UCIC_PREFIX):], True
    return name, False


class SolveResult(BaseModel):
    """Resultado de um algoritmo sobre uma instância"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    algorithm: str
    code: IndexCode
    reduced_code: IndexCode
    reduction: ReductionResult
    coding_gain: Optional[Fraction] = None
    fallback_used: bool = False
    initial_partition_size: int = 0
    trace: Optional[SolveTrace] = None
    report: Optional[DecodeReport] = None

    @property
    def ell(self) -> int:
        return self.code.ell

    def summary_line(self) -> str:
        gain = format_gain(self.coding_gain) if self.coding_gain is not None else "-"
        fallback = "sim" if self.fallback_used else "não"
        return f"algorithm={self.algorithm} ell={self.ell} coding_gain={gain} fallback_used={fallback}"


class BusinessLayer:
    """Resolve e certifica instâncias com o algoritmo escolhido"""

    def __init__(self,
                 logger=None,
                 continue_after_fallback: Optional[bool] = None,
                 verbose: bool = False):
        """
        Inicializa a camada de negócio

        Args:
            logger: SolveDecisionLogger (opcional) para registrar as decisões
            continue_after_fallback: Sobrescreve a configuração do solver
            verbose: Imprime o progresso
        """
        self.logger = logger
        self.continue_after_fallback = continue_after_fallback
        self.verbose = verbose
        self.trusted = TrustedLayer()

    def solve_reduced(self, reduced: Instance, algorithm: str) -> Tuple[IndexCode, Optional[SolveTrace], int]:
        """
        Roda o algoritmo sobre a instância já reduzida

        Returns:
            Tupla (código, trace ou None para baselines, r da partição inicial)
        """
        partition_name, use_ucic = parse_algorithm(algorithm)
        partitioner = get_partitioner(partition_name)
        if use_ucic:
            code, trace = ucic_solve(
                reduced,
                partitioner,
                continue_after_fallback=self.continue_after_fallback,
                logger=self.logger,
                partitioner_name=partition_name,
            )
            return code, trace, trace.initial_partition_size
        code, partition = clique_partition_code(reduced, partitioner)
        return code, None, partition.r

    def solve(self, inst: Instance, algorithm: str) -> SolveResult:
        """
        Valida, reduz e resolve a instância

        Args:
            inst: Instância original (unicast)
            algorithm: ldg, color-saving, greedy ou ucic-<partição>

        Returns:
            SolveResult com o código em termos dos símbolos originais
        """
        reduction = self.trusted.reduce_to_single_unicast(inst)
        code, trace, initial_r = self.solve_reduced(reduction.instance, algorithm)
        gain = coding_gain(reduction.instance.k, code.ell) if code.ell else None
        return SolveResult(
            algorithm=algorithm,
            code=reduction.lift_code(code),
            reduced_code=code,
            reduction=reduction,
            coding_gain=gain,
            fallback_used=bool(trace and trace.fallback_used),
            initial_partition_size=initial_r,
            trace=trace,
        )

    def verify(self,
               inst: Instance,
               code: IndexCode,
               draws: Optional[int] = None,
               fixpoint: Optional[bool] = None,
               payload_size_bytes: Optional[int] = None) -> DecodeReport:
        """
        Certifica o código contra a instância original

        Args:
            inst: Instância original
            code: Código em termos dos símbolos originais
            draws: Sorteios de payload
            fixpoint: Decodificação com revarredura
            payload_size_bytes: Sobrescreve o b da instância

        Returns:
            DecodeReport
        """
        report = verify_code_valid(
            inst, code, draws=draws, fixpoint=fixpoint, payload_size_bytes=payload_size_bytes
        )
        if self.logger is not None:
            self.logger.log_verification(code, report)
        return report

    def execute(self, inst: Instance, algorithm: str) -> SolveResult:
        """
        Executa o processo completo da camada BUSINESS

        Args:
            inst: Instância lida e validada
            algorithm: Nome do algoritmo

        Returns:
            SolveResult já certificado

        Raises:
            InvalidCodeProduced: O código não decodifica para algum cliente
        """
        if self.verbose:
            print(f"🔄 [BUSINESS LAYER] Resolvendo com {algorithm}...")

        result = self.solve(inst, algorithm)
        report = self.verify(inst, result.code, fixpoint=False)
        if not report.valid:
            raise InvalidCodeProduced(
                f"{algorithm} produziu código inválido {result.code}: insatisfeitos {sorted(report.unsatisfied)}",
                trace=result.trace,
            )
        result = result.model_copy(update={"report": report})

        if self.verbose:
            print(f"✅ [BUSINESS LAYER] Código com ℓ={result.ell} certificado")
            if result.fallback_used:
                print("   ⚠️  Step 5 (fallback) acionado")

        return result


# Função de conveniência para uso direto
def solve_instance(inst: Instance, algorithm: str = "ucic-ldg") -> SolveResult:
    """
    Função de conveniência para resolver e certificar uma instância

    Args:
        inst: Instância unicast
        algorithm: Nome do algoritmo

    Returns:
        SolveResult
    """
    return BusinessLayer().execute(inst, algorithm)
