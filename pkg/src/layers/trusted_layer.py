"""
TRUSTED LAYER - Camada de Validação e Redução
Responsável por validar as invariantes da instância e aplicar a redução
unicast → single-unicast (cada cliente virtual quer um único símbolo)
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from src.errors import InvalidInstance, MulticastInput
from src.models.code import IndexCode
from src.models.instance import Instance, validate_instance


class ReductionResult(BaseModel):
    """Instância reduzida e os mapas de volta para os ids originais"""

    model_config = ConfigDict(frozen=True)

    instance: Instance
    client_origin: Tuple[int, ...]
    symbol_origin: Tuple[int, ...]
    original_n: int
    original_k: int

    @property
    def is_identity(self) -> bool:
        n = self.instance.n
        if self.original_n != n or self.original_k != n:
            return False
        return self.client_origin == tuple(range(n)) and self.symbol_origin == tuple(range(n))

    def lift_code(self, code: IndexCode) -> IndexCode:
        """Traduz um código da instância reduzida para os símbolos originais"""
        return IndexCode.from_supports(
            frozenset(self.symbol_origin[s] for s in t.support) for t in code.transmissions
        )

    def original_client(self, virtual_client: int) -> int:
        return self.client_origin[virtual_client]


class TrustedLayer:
    """Garante que só instâncias válidas e reduzidas chegam aos algoritmos"""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def validate(self, inst: Instance) -> List[str]:
        """
        Valida as invariantes da instância

        Args:
            inst: Instância a validar

        Returns:
            Lista de violações (cada uma cita o cliente e a regra)
        """
        return validate_instance(inst)

    def reduce_to_single_unicast(self, inst: Instance) -> ReductionResult:
        """
        Reduz uma instância unicast para single-unicast

        Clientes virtuais seguem a ordem crescente do símbolo desejado; o
        símbolo v novo é o v-ésimo menor símbolo desejado. Símbolos que
        ninguém quer saem do universo e clientes sem want set são descartados.

        Args:
            inst: Instância válida

        Returns:
            ReductionResult com a instância reduzida e os mapas de origem

        Raises:
            InvalidInstance: Instância viola as invariantes
            MulticastInput: Símbolo pedido por dois clientes
        """
        violations = self.validate(inst)
        if violations:
            raise InvalidInstance(violations)

        wanters: Dict[int, List[int]] = {}
        for client, want in enumerate(inst.want):
            for symbol in want:
                wanters.setdefault(symbol, []).append(client)
        for symbol in sorted(wanters):
            if len(wanters[symbol]) > 1:
                raise MulticastInput(symbol, wanters[symbol])

        symbol_origin = tuple(sorted(wanters))
        new_id = {s: v for v, s in enumerate(symbol_origin)}
        client_origin = tuple(wanters[s][0] for s in symbol_origin)

        has_sets = [
            {new_id[s] for s in inst.has[client] if s in new_id}
            for client in client_origin
        ]
        reduced = Instance.single_unicast(has_sets, payload_size_bytes=inst.payload_size_bytes)
        return ReductionResult(
            instance=reduced,
            client_origin=client_origin,
            symbol_origin=symbol_origin,
            original_n=inst.n,
            original_k=inst.k,
        )

    def execute(self, inst: Instance) -> ReductionResult:
        """
        Executa o processo completo da camada TRUSTED

        Args:
            inst: Instância lida pela RAW LAYER

        Returns:
            ReductionResult pronto para a BUSINESS LAYER
        """
        if self.verbose:
            print("🔄 [TRUSTED LAYER] Validando instância...")

        result = self.reduce_to_single_unicast(inst)

        if self.verbose:
            print("   ✅ Validação concluída")
            if result.is_identity:
                print("   ✨ Instância já é single-unicast")
            else:
                print(f"   ✨ Redução aplicada: {inst.n} clientes → {result.instance.n} clientes virtuais")
            print("✅ [TRUSTED LAYER] Instância pronta!")

        return result


# Função de conveniência para uso direto
def reduce_to_single_unicast(inst: Instance) -> ReductionResult:
    """
    Função de conveniência para reduzir uma instância

    Args:
        inst: Instância unicast válida

    Returns:
        ReductionResult
    """
    return TrustedLayer().reduce_to_single_unicast(inst)
