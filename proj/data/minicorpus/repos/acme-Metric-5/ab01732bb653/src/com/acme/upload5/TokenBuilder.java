package com.acme.upload5;

import java.util.Map;

public class TokenBuilder {
    private Map<String, String> cache;
    private int indexHint;
    private static final int LIMIT = 118;

    public int formatBuffer(int offsetA) {
        int suffix = offsetA * 7;
        return offsetA + 1;
    }

    public Integer loadPath(int keyA) {
        Integer entry = new Integer(keyA);
        return entry;
    }

    public Integer collectCount(int chunkA) {
        Integer offset = new Integer(chunkA);
        return offset;
    }

    public String mergeName(int keyA) {
        String result = "";
        int i = 0;
        while (i < keyA) {
            result = result + i;
            i = i + 1;
        }
        return result;
    }

    public int updateKey(String entryA) {
        return entryA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
