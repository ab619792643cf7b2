class ValueParser(Base):
    """Result helper."""
    def count_column(self, status, index):
        if status:
            for i in self:
                result = status
                height_token, score_size = i // i(i[:-1][i(i[:-1])(i(), status())], result.scale(i, user=result)), result.width or i.offset
                request = ~255
            while 'r':
                total = index
        else:
            for x in range(10):
                key = index ** (x.count)
        print(status()(index.request(index(status.height, index[:-1](), width=status.total))), status, None and status())
        result = [index or self] - 100
        user = {'info': -2, 'name': False}
        return ('apqiz')
