"""
SOLVE DECISION LOGGER - Registro das Decisões do Solver
Registra como o UCIC chegou em cada transmissão: clique escolhida,
piggyback, ganhos de cache, fallbacks e vereditos de verificação
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.config import get_settings
from src.models.instance import client_name, format_support, symbol_name


class SolveDecisionLogger:
    """Logger para registrar decisões e raciocínio do solver"""

    def __init__(self, log_dir: Optional[str] = None):
        """
        Inicializa o logger

        Args:
            log_dir: Diretório dos logs (default: UCIC_LOG_DIR)
        """
        self.log_dir = Path(log_dir or get_settings().log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.session_file = self.log_dir / f"solve_decisions_{timestamp}.json"

        self.decisions: List[Dict[str, Any]] = []

        self.session_metadata = {
            "session_id": timestamp,
            "start_time": datetime.now().isoformat(),
            "total_decisions": 0,
            "decision_types": {}
        }

    def _append(self, entry: Dict[str, Any]) -> None:
        entry["timestamp"] = datetime.now().isoformat()
        self.decisions.append(entry)
        self.session_metadata["total_decisions"] += 1
        kind = entry["type"]
        self.session_metadata["decision_types"][kind] = self.session_metadata["decision_types"].get(kind, 0) + 1

    def log_iteration(self, partitioner: str, record, beta_size: int) -> None:
        """
        Registra uma transmissão com piggyback

        Args:
            partitioner: Nome da heurística do Step 1
            record: IterationRecord da iteração
            beta_size: Quantidade de cliques mínimas avaliadas
        """
        gains = [f"{client_name(m)}+{symbol_name(s)}" for m, s in record.cache_gains]
        self._append({
            "type": "piggyback",
            "partitioner": partitioner,
            "iteration": record.iteration,
            "clique": format_support(record.chosen_clique),
            "piggyback": symbol_name(record.piggyback),
            "transmission": format_support(record.chosen_clique | {record.piggyback}),
            "gain": record.gain,
            "cache_gains": gains,
            "partition_size_r": record.partition_size_r,
            "reasoning": (
                f"{beta_size} cliques de tamanho mínimo avaliadas; "
                f"{symbol_name(record.piggyback)} atualiza {record.gain} caches"
            ),
        })

    def log_fallback(self, partitioner: str, record) -> None:
        """Registra um Step 5 (ou uma transmissão sem piggyback)"""
        self._append({
            "type": "fallback",
            "partitioner": partitioner,
            "iteration": record.iteration,
            "clique": format_support(record.chosen_clique) if record.chosen_clique else None,
            "satisfied": [client_name(c) for c in sorted(record.satisfied)],
            "transmissions": record.transmissions,
            "partition_size_r": record.partition_size_r,
            "reasoning": "nenhuma clique mínima admite piggyback com ganho >= 1",
        })

    def log_dominance_guard(self, partitioner: str, initial_r: int, attempted_ell: int) -> None:
        """Registra a troca do código pelo da partição inicial"""
        self._append({
            "type": "dominance_guard",
            "partitioner": partitioner,
            "initial_partition_size": initial_r,
            "attempted_ell": attempted_ell,
            "reasoning": f"ℓ={attempted_ell} excede r={initial_r}; usando a partição inicial",
        })

    def log_verification(self, code, report) -> None:
        """Registra o veredito do verificador"""
        self._append({
            "type": "verification",
            "code": str(code),
            "ell": code.ell,
            "valid": report.valid,
            "unsatisfied": {
                client_name(c): [symbol_name(s) for s in sorted(missing)]
                for c, missing in report.unsatisfied.items()
            },
            "draws": report.draws,
        })

    def save_session(self) -> str:
        """
        Salva todos os logs da sessão em arquivo JSON

        Returns:
            Caminho do arquivo salvo
        """
        self.session_metadata["end_time"] = datetime.now().isoformat()

        full_log = {
            "metadata": self.session_metadata,
            "decisions": self.decisions
        }

        with open(self.session_file, 'w', encoding='utf-8') as f:
            json.dump(full_log, f, ensure_ascii=False, indent=2)

        print(f"\n✅ Log de decisões salvo: {self.session_file}")
        print(f"   📊 Total de decisões: {self.session_metadata['total_decisions']}")
        print(f"   🔍 Tipos: {self.session_metadata['decision_types']}")

        return str(self.session_file)

    def save_summary_report(self) -> str:
        """
        Gera relatório resumido em formato texto

        Returns:
            Caminho do arquivo de resumo
        """
        summary_file = self.session_file.with_suffix('.txt')

        with open(summary_file, 'w', encoding='utf-8') as f:
            f.write("=" * 80 + "\n")
            f.write("RELATÓRIO DE DECISÕES DO SOLVER\n")
            f.write("=" * 80 + "\n\n")

            f.write(f"Sessão: {self.session_metadata['session_id']}\n")
            f.write(f"Início: {self.session_metadata['start_time']}\n")
            f.write(f"Fim: {self.session_metadata.get('end_time', 'Em andamento')}\n")
            f.write(f"Total de decisões: {self.session_metadata['total_decisions']}\n\n")

            f.write("-" * 80 + "\n")
            f.write("TIPOS DE DECISÕES\n")
            f.write("-" * 80 + "\n")
            for dtype, count in self.session_metadata['decision_types'].items():
                f.write(f"  {dtype}: {count} decisões\n")
            f.write("\n")

            piggybacks = [d for d in self.decisions if d['type'] == 'piggyback']
            fallbacks = [d for d in self.decisions if d['type'] == 'fallback']
            guards = [d for d in self.decisions if d['type'] == 'dominance_guard']
            verifications = [d for d in self.decisions if d['type'] == 'verification']

            if piggybacks:
                f.write("-" * 80 + "\n")
                f.write(f"TRANSMISSÕES COM PIGGYBACK ({len(piggybacks)})\n")
                f.write("-" * 80 + "\n\n")
                for i, d in enumerate(piggybacks, 1):
                    f.write(f"{i}. [{d['partitioner']}] iteração {d['iteration']}: {d['transmission']}\n")
                    f.write(f"   Clique: {d['clique']}  Piggyback: {d['piggyback']}  Ganho: {d['gain']}\n")
                    f.write(f"   Caches: {', '.join(d['cache_gains']) or '-'}\n")
                    f.write(f"   Raciocínio: {d['reasoning']}\n\n")

            if fallbacks:
                f.write("-" * 80 + "\n")
                f.write(f"FALLBACKS ({len(fallbacks)})\n")
                f.write("-" * 80 + "\n\n")
                for i, d in enumerate(fallbacks, 1):
                    f.write(f"{i}. [{d['partitioner']}] iteração {d['iteration']}: "
                            f"{d['transmissions']} transmissões, satisfaz {', '.join(d['satisfied'])}\n")

            if guards:
                f.write("\n" + "-" * 80 + "\n")
                f.write(f"GUARDAS DE DOMINÂNCIA ({len(guards)})\n")
                f.write("-" * 80 + "\n\n")
                for d in guards:
                    f.write(f"  [{d['partitioner']}] {d['reasoning']}\n")

            if verifications:
                f.write("\n" + "-" * 80 + "\n")
                f.write(f"VERIFICAÇÕES ({len(verifications)})\n")
                f.write("-" * 80 + "\n\n")
                for d in verifications:
                    status = "válido" if d['valid'] else "INVÁLIDO"
                    f.write(f"  {d['code']} (ℓ={d['ell']}): {status}\n")

            f.write("\n" + "=" * 80 + "\n")
            f.write("FIM DO RELATÓRIO\n")
            f.write("=" * 80 + "\n")

        print(f"📄 Resumo salvo: {summary_file}")

        return str(summary_file)

    def get_stats(self) -> Dict[str, Any]:
        """
        Retorna estatísticas da sessão

        Returns:
            Dicionário com estatísticas
        """
        return {
            "total_decisions": len(self.decisions),
            "decision_types": self.session_metadata["decision_types"],
            "log_file": str(self.session_file)
        }


# Instância global do logger (singleton)
_global_logger: Optional[SolveDecisionLogger] = None


def get_logger(log_dir: Optional[str] = None) -> SolveDecisionLogger:
    """Retorna a instância global do logger (nova se o diretório pedido for outro)"""
    global _global_logger
    if _global_logger is None or (log_dir is not None and Path(log_dir) != _global_logger.log_dir):
        _global_logger = SolveDecisionLogger(log_dir)
    return _global_logger


def reset_logger() -> None:
    """Reseta o logger global (útil para testes)"""
    global _global_logger
    _global_logger = None
