"""
Output helpers shared by the commands: game rendering and --json records
"""
import sys
from dataclasses import dataclass

from pydantic import BaseModel

from config.settings import settings
from simplegames.errors import GameError
from simplegames.models.game import Game
from simplegames.schemas.game_schema import GameRecord
from simplegames.schemas.table_schema import ErrorResponse
from simplegames.services.game_core import format_quota
from simplegames.services.quota_recognition import is_quota_game
from simplegames.services.search_engine import SearchEngine


def describe(game: Game) -> str:
    """Quota notation when a witness exists, else n:HEX"""
    if game.n_voters <= settings.MAX_QUOTA_VOTERS:
        try:
            witness = is_quota_game(game)
        except GameError:
            witness = None
        if witness is not None:
            return format_quota(witness)
    return str(game)


def game_record(game: Game) -> GameRecord:
    return GameRecord(n=game.n_voters, mask_hex=game.to_hex(), text=describe(game))


@dataclass
class Output:
    """Writes either the human text or the JSON record to stdout"""
    as_json: bool = False

    def emit(self, record: BaseModel, text: str) -> None:
        print(record.model_dump_json() if self.as_json else text)

    def lines(self, records: list[BaseModel], text: str) -> None:
        """One JSON record per line, or the human text"""
        if self.as_json:
            for record in records:
                print(record.model_dump_json())
        else:
            print(text)

    def error(self, error: Exception) -> None:
        if self.as_json:
            response = ErrorResponse(error=type(error).__name__, details=str(error))
            print(response.model_dump_json(), file=sys.stderr)
        else:
            print(f"error: {type(error).__name__}: {error}", file=sys.stderr)


@dataclass
class CommandContext:
    """What every command handler receives besides its arguments"""
    output: Output
    engine: SearchEngine
